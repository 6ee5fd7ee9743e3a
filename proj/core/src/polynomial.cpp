#include "fabius/polynomial.hpp"

namespace fabius {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t j) const {
  return j < coefficients_.size() ? coefficients_[j] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Rational> out;
  out.reserve(coefficients_.size() - 1);
  for (std::size_t j = 1; j < coefficients_.size(); ++j) {
    out.push_back(coefficients_[j] * Rational(static_cast<long>(j)));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (coefficients_.empty()) return {};
  std::vector<Rational> out(coefficients_.size() + 1);
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    out[j + 1] = coefficients_[j] / Rational(static_cast<long>(j + 1));
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) coefficients_[j] += rhs.coefficients_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) coefficients_[j] -= rhs.coefficients_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

}  // namespace fabius
