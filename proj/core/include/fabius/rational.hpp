#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fabius {

/*
 * Exact arbitrary-precision fraction.
 *
 * Always held in canonical form: denominator > 0 and
 * gcd(|numerator|, denominator) = 1, so equality is structural.
 * Backed by GMP's mpq_t; every arithmetic result is re-canonicalized.
 */
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(mpz_class(static_cast<long>(value))) {}  // NOLINT(implicit)
  template <std::unsigned_integral T>
  Rational(T value) : value_(mpz_class(static_cast<unsigned long>(value))) {}  // NOLINT(implicit)

  explicit Rational(const mpz_class& integer) : value_(integer) {}

  // Throws std::domain_error when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  // Parses "p", "-p" or "p/q" (no spaces). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // 2^exponent for any signed exponent.
  static Rational pow2(long exponent);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  // Throws std::domain_error on zero.
  Rational reciprocal() const;
  // Integer power; negative exponents invert (throws on 0^-n).
  Rational pow(long exponent) const;

  // "p/q", or "p" when q == 1; a leading '-' goes on the numerator.
  std::string to_string() const;
  // Round-half-even at `digits` fractional digits, e.g. "0.5000".
  std::string to_decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace fabius
