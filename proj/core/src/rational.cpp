#include "fabius/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fabius {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  return Rational(n, mpz_class(std::string(den), 10));
}

Rational Rational::pow2(long exponent) {
  mpz_class p;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  if (exponent < 0) return Rational(mpz_class(1), p);
  return Rational(p);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  mpq_class result;
  result.get_num() = std::move(num);
  result.get_den() = std::move(den);
  return Rational(std::move(result));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("Rational: negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = ::abs(value_.get_num()) * scale;
  const mpz_class& den = value_.get_den();
  mpz_class quot;
  mpz_class rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(2 * rem, den);
  if (half > 0 || (half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  std::string magnitude = quot.get_str(10);
  if (digits > 0) {
    const auto width = static_cast<std::size_t>(digits) + 1;
    if (magnitude.size() < width) magnitude.insert(0, width - magnitude.size(), '0');
    magnitude.insert(magnitude.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  // Values that round to zero print unsigned.
  if (sign() < 0 && quot != 0) magnitude.insert(0, 1, '-');
  return magnitude;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace fabius
