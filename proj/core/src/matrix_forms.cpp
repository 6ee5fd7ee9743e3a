#include "fabius/matrix_forms.hpp"

#include <stdexcept>
#include <string>

#include "fabius/number_theory.hpp"

namespace fabius {

namespace {

void require_index(long i, long min, const char* what) {
  if (i < min) {
    throw std::invalid_argument(std::string(what) + ": index must be >= " + std::to_string(min) +
                                ", got " + std::to_string(i));
  }
}

std::size_t as_size(long n) { return static_cast<std::size_t>(n); }

}  // namespace

RationalMatrix build_M(long i) {
  require_index(i, 1, "build_M");
  RationalMatrix m(as_size(i), as_size(i + 1));
  for (long k = 1; k <= i; ++k) {
    const Rational scale = Rational::pow2(-2 * k) / Rational(k);
    for (long j = 1; j <= k + 1; ++j) m(as_size(k), as_size(j)) = binomial(2 * k, 2 * j - 2) * scale;
  }
  return m;
}

RationalVector build_R(long i) {
  require_index(i, 1, "build_R");
  RationalVector r(as_size(i));
  const Rational scale = (Rational::pow2(2 * i) - Rational(1)).reciprocal();
  for (long j = 1; j <= i; ++j) {
    r(as_size(j)) = binomial(2 * i, 2 * j - 2) * scale / Rational(2 * i - 2 * j + 3);
  }
  return r;
}

RationalMatrix stacked_matrix(long i) {
  require_index(i, 0, "stacked_matrix");
  RationalMatrix top(1, as_size(i + 1));
  top(1, 1) = Rational(2);
  if (i == 0) return top;
  return RationalMatrix::stack(top, build_M(i));
}

RationalMatrix stacked_inverse(long i) {
  const RationalMatrix a = stacked_matrix(i);
  const std::size_t n = a.rows();
  RationalMatrix inv(n, n);
  // Column c of the inverse solves a x = e_c; a is lower triangular.
  for (std::size_t c = 1; c <= n; ++c) {
    for (std::size_t r = c; r <= n; ++r) {
      Rational acc = r == c ? Rational(1) : Rational(0);
      for (std::size_t k = c; k < r; ++k) acc -= a(r, k) * inv(k, c);
      if (a(r, r).is_zero()) {
        throw std::logic_error("stacked_inverse: zero pivot at row " + std::to_string(r));
      }
      inv(r, c) = acc / a(r, r);
    }
  }
  if (a * inv != RationalMatrix::identity(n)) {
    throw std::logic_error("stacked_inverse: product check failed for i = " + std::to_string(i));
  }
  return inv;
}

RationalMatrix build_G(long i) {
  require_index(i, 1, "build_G");
  const RationalMatrix extend =
      RationalMatrix::stack(RationalMatrix::identity(as_size(i)), RationalMatrix::row_matrix(build_R(i)));
  return build_M(i) * extend * stacked_inverse(i - 1);
}

RationalVector closed_form_row(long i) {
  require_index(i, 1, "closed_form_row");
  RationalVector row(as_size(i));
  const Rational outer = Rational(4) / (Rational(1) - Rational::pow2(2 * i));
  for (long j = 1; j <= i; ++j) {
    const long s = 2 * j - 2 * i - 3;  // negative odd
    const Rational bracket = euler_even(i - j + 1) / Rational::pow2(2 * (2 - j)) +
                             zeta_at(s) / Rational(s) * (Rational(1) - Rational::pow2(2 * (i - j + 2)));
    const Rational tail = j == 1 ? Rational(1, 2 * i) : binomial(2 * i - 1, 2 * j - 3);
    row(as_size(j)) = bracket * outer * tail;
  }
  return row;
}

RationalVector verify_theorem(long i) {
  const RationalMatrix g = build_G(i);
  return g.row(g.rows()) - closed_form_row(i);
}

}  // namespace fabius
