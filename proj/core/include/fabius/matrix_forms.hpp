#pragma once

#include "fabius/matrix.hpp"

namespace fabius {

/*
 * Matrix forms of the d-recurrences.
 *
 *   M_i  (i x (i+1))   (d_1, d_3, ..., d_{2i-1}) = M_i (d_0, d_2, ..., d_{2i})
 *   R_i  (length i)    d_{2i} = R_i (d_0, ..., d_{2i-2})
 *   S_i = [2 e_1 ; M_i]            lower triangular, (i+1) x (i+1)
 *   G_i = M_i [I_i ; R_i] S_{i-1}^{-1}
 *
 * G_i maps (2 d_0, d_1, ..., d_{2i-3}) to (d_1, ..., d_{2i-1}); its last
 * row has the closed form computed by closed_form_row().
 *
 * All indices are 1-based. Functions taking i reject i < 1
 * (stacked_matrix/stacked_inverse accept i = 0) with std::invalid_argument.
 */

// (M_i)_{k,j} = C(2k, 2j-2) / (4^k k).
RationalMatrix build_M(long i);

// (R_i)_j = C(2i, 2j-2) / ((4^i - 1)(2i - 2j + 3)).
RationalVector build_R(long i);

// [2 e_1^{i+1} ; M_i].
RationalMatrix stacked_matrix(long i);

// Exact inverse of stacked_matrix(i) by forward substitution. Throws
// std::logic_error on a zero pivot or if the product check against the
// identity fails.
RationalMatrix stacked_inverse(long i);

RationalMatrix build_G(long i);

// Closed form of the last row of G_i, built from Euler numbers and zeta at
// negative odd integers.
RationalVector closed_form_row(long i);

// last_row(build_G(i)) - closed_form_row(i); all zero.
RationalVector verify_theorem(long i);

}  // namespace fabius
