#pragma once

#include <span>

#include "fabius/dyadic_table.hpp"
#include "fabius/polynomial.hpp"
#include "fabius/rational.hpp"

namespace fabius {

// ---------------------------------------------------------------------------
// Single recurrence steps. Each computes one value from explicitly supplied
// earlier values, so callers can re-derive any table entry from its
// neighbours. All throw std::invalid_argument when the span is too short.
// ---------------------------------------------------------------------------

// F(2^-k) from f[j] = F(2^-j). Odd k >= 3 reads f[1..k-2]; even k reads
// f[1..k+1]; k = 1 is the anchor 1/2.
Rational fabius_step(long k, std::span<const Rational> f);

// d_i by the alternating recurrences from evens[t] = d_{2t}. Odd i reads
// evens[0..(i+1)/2]; even i >= 2 reads evens[0..i/2-1]; d_0 = 1/2.
Rational d_alternating_step(long i, std::span<const Rational> evens);

// d_i = 2^{i(i+1)/2} i! F(2^{-i-1}).
Rational d_from_f_value(long i, const Rational& f_next);

// Theorem recurrence for odd i >= 1 from odds[t] = d_{2t+1}, t < (i-1)/2.
// Throws std::invalid_argument for even or non-positive i.
Rational theorem_d_odd(long i, std::span<const Rational> odds);

// ---------------------------------------------------------------------------
// Table-backed operations. Overloads without a table use shared_table().
// ---------------------------------------------------------------------------

/// F(2^-k), k >= 0.
Rational fabius_dyadic(long k, DyadicTable& table);
Rational fabius_dyadic(long k);

Rational d_value(long i, DRoute route, DyadicTable& table);
Rational d_value(long i, DRoute route = DRoute::alternating);

Rational theorem_d_odd(long i, DyadicTable& table);
Rational theorem_d_odd(long i);

/// mu_n = integral_0^1 F(x) x^n dx = 1/(n+1) - d_n.
Rational moment(long n, DyadicTable& table);
Rational moment(long n);

/// Coefficient of x^j in P_i(x) = F(2^-i (1+x)) - (-1)^i F(2^-i (1-x)),
/// by the closed form; zero unless 0 <= j < i and i - j is odd.
/// Throws std::invalid_argument for i < 1 or j < 0.
Rational coeff_c(long i, long j, DyadicTable& table);
Rational coeff_c(long i, long j);

/// P_i built by repeated integration, P_{m+1} = 2^-m int_0^x P_m + P_{m+1}(0),
/// starting from P_0 = 0. Independent of coeff_c apart from the F values
/// entering the constant terms.
Polynomial poly_P(long i, DyadicTable& table);
Polynomial poly_P(long i);

/// sum_{j=0}^{i+1} c_{i+2}(j) - F(2^{-i-1}); identically zero.
Rational lem1_residual(long i, DyadicTable& table);
Rational lem1_residual(long i);

/// sum_{m=0}^{j} C(2j, 2m) E_{2m}; 1 at j = 0 and 0 afterwards.
Rational euler_identity_sum(long j);

/// 1 + sum_{m=0}^{j} B_{2m+2} (4^{m+1} - 16^{m+1}) (2j+1)! / ((2j-2m)! (2m+2)!);
/// zero for every j >= 0.
Rational bernoulli_identity_sum(long j);

}  // namespace fabius
