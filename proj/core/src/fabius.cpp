#include "fabius/fabius.hpp"

#include <stdexcept>
#include <string>

#include "fabius/number_theory.hpp"

namespace fabius {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

const Rational& at(std::span<const Rational> values, long index, const char* what) {
  require(index >= 0 && static_cast<std::size_t>(index) < values.size(),
          std::string(what) + ": missing earlier value at index " + std::to_string(index));
  return values[static_cast<std::size_t>(index)];
}

}  // namespace

Rational fabius_step(long k, std::span<const Rational> f) {
  require(k >= 0, "fabius_step: negative index");
  if (k == 1) return Rational(1, 2);
  Rational sum;
  if (k % 2 == 1) {
    // F(2^{-i-1}) with i = k - 1 even.
    const long i = k - 1;
    for (long j = 1; j <= i / 2; ++j) {
      const Rational denom = (Rational::pow2(i + j) - Rational::pow2(j)) * factorial(2 * j + 1);
      sum += Rational::pow2(2 * j * (j - i)) * at(f, i + 1 - 2 * j, "fabius_step") / denom;
    }
  } else {
    const long i = k;
    for (long j = 0; j <= i / 2; ++j) {
      const Rational denom = Rational::pow2(j - 1) * factorial(2 * j);
      sum += Rational::pow2(2 * j * (j - i)) * at(f, i + 1 - 2 * j, "fabius_step") / denom;
    }
  }
  return sum;
}

Rational d_alternating_step(long i, std::span<const Rational> evens) {
  require(i >= 0, "d_alternating_step: negative index");
  if (i == 0) return Rational(1, 2);
  Rational sum;
  if (i % 2 == 1) {
    for (long j = 0; j <= (i + 1) / 2; ++j) {
      sum += binomial(i + 1, 2 * j) * at(evens, j, "d_alternating_step");
    }
    return sum / (Rational::pow2(i) * Rational(i + 1));
  }
  const Rational scale = (Rational::pow2(i) - Rational(1)).reciprocal();
  for (long j = 0; j <= i / 2 - 1; ++j) {
    sum += binomial(i, 2 * j) * at(evens, j, "d_alternating_step") * scale / Rational(i - 2 * j + 1);
  }
  return sum;
}

Rational d_from_f_value(long i, const Rational& f_next) {
  require(i >= 0, "d_from_f_value: negative index");
  return Rational::pow2(i * (i + 1) / 2) * factorial(i) * f_next;
}

Rational theorem_d_odd(long i, std::span<const Rational> odds) {
  require(i >= 1 && i % 2 == 1,
          "theorem_d_odd: index must be odd and positive, got " + std::to_string(i));
  const Rational outer_denom = Rational::pow2(i + 1) - Rational(1);
  Rational sum;
  for (long j = -2; j < i - 1; j += 2) {
    const Rational zeta_term = zeta_at(j - i) / Rational(j - i);
    const Rational euler_term =
        Rational::pow2(j) * euler(i - j - 1) / (Rational::pow2(i - j + 1) - Rational(1));
    const Rational weight =
        (zeta_term - euler_term) * (Rational::pow2(i - j + 3) - Rational(4)) / outer_denom;
    if (j == -2) {
      sum += weight / Rational(i + 1);
    } else {
      sum += weight * binomial(i, j + 1) * at(odds, j / 2, "theorem_d_odd");
    }
  }
  return sum;
}

Rational fabius_dyadic(long k, DyadicTable& table) { return table.f(k); }
Rational fabius_dyadic(long k) { return fabius_dyadic(k, shared_table()); }

Rational d_value(long i, DRoute route, DyadicTable& table) { return table.d(i, route); }
Rational d_value(long i, DRoute route) { return d_value(i, route, shared_table()); }

Rational theorem_d_odd(long i, DyadicTable& table) { return table.d_theorem(i); }
Rational theorem_d_odd(long i) { return theorem_d_odd(i, shared_table()); }

Rational moment(long n, DyadicTable& table) { return table.mu(n); }
Rational moment(long n) { return moment(n, shared_table()); }

Rational coeff_c(long i, long j, DyadicTable& table) {
  require(i >= 1, "coeff_c: P_0 has no coefficient family (i must be >= 1)");
  require(j >= 0, "coeff_c: negative power");
  if (j >= i || (i - j) % 2 == 0) return Rational(0);
  // 2^{(1-i)j} F(2^{j-i}) / (2^{(1-j)j/2 - 1} j!)
  return Rational::pow2((1 - i) * j - ((1 - j) * j / 2 - 1)) * table.f(i - j) / factorial(j);
}
Rational coeff_c(long i, long j) { return coeff_c(i, j, shared_table()); }

Polynomial poly_P(long i, DyadicTable& table) {
  require(i >= 0, "poly_P: negative index");
  Polynomial p;
  for (long m = 0; m < i; ++m) {
    p = p.antiderivative() * Rational::pow2(-m);
    if (m % 2 == 0) p += Polynomial{Rational(2) * table.f(m + 1)};
  }
  return p;
}
Polynomial poly_P(long i) { return poly_P(i, shared_table()); }

Rational lem1_residual(long i, DyadicTable& table) {
  require(i >= 0, "lem1_residual: negative index");
  Rational sum;
  for (long j = 0; j <= i + 1; ++j) sum += coeff_c(i + 2, j, table);
  return sum - table.f(i + 1);
}
Rational lem1_residual(long i) { return lem1_residual(i, shared_table()); }

Rational euler_identity_sum(long j) {
  require(j >= 0, "euler_identity_sum: negative index");
  Rational sum;
  for (long m = 0; m <= j; ++m) sum += binomial(2 * j, 2 * m) * euler_even(m);
  return sum;
}

Rational bernoulli_identity_sum(long j) {
  require(j >= 0, "bernoulli_identity_sum: negative index");
  const Rational top = factorial(2 * j + 1);
  Rational sum(1);
  for (long m = 0; m <= j; ++m) {
    const Rational weight = Rational::pow2(2 * (m + 1)) - Rational::pow2(4 * (m + 1));
    sum += bernoulli(2 * m + 2) * weight * top / (factorial(2 * j - 2 * m) * factorial(2 * m + 2));
  }
  return sum;
}

}  // namespace fabius
