#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fabius/rational.hpp"

namespace fabius {

// Dense univariate polynomial over the rationals. Coefficient j multiplies
// x^j. Trailing zeros are trimmed, so the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  // Coefficient of x^j; zero beyond the stored range.
  Rational coefficient(std::size_t j) const;
  std::span<const Rational> coefficients() const { return coefficients_; }

  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

}  // namespace fabius
