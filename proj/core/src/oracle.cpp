#include "fabius/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fabius/number_theory.hpp"

namespace fabius {

namespace {

// 2^{N(N+1)/2} / N!, the reciprocal of N! * prod 2^-n.
Rational normalizer(int depth) {
  return Rational::pow2(static_cast<long>(depth) * (depth + 1) / 2) / factorial(depth);
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// sum_C (-1)^{popcount C} int_0^1 (x - (C + shift) 2^-N)_+^N x^n dx, before
// the normalizer. With c = m 2^-N,
//   int_c^1 (x - c)^N x^n dx = sum_k C(n,k) c^{n-k} (1-c)^{N+k+1} / (N+k+1),
// and every term shares the denominator 2^{N(N+n+1)}.
Rational integrated_pieces(int depth, long n, unsigned shift) {
  const std::uint64_t cells = std::uint64_t{1} << depth;
  const auto un = static_cast<unsigned long>(n);
  const auto ud = static_cast<unsigned long>(depth);
  std::vector<mpz_class> sums(un + 1);
  std::vector<mpz_class> left_powers(un + 1);
  for (std::uint64_t c = 0; c < cells; ++c) {
    const std::uint64_t m = c + shift;
    if (m >= cells) continue;  // piece vanishes on [0, 1]
    const mpz_class left(static_cast<unsigned long>(m));
    const mpz_class right(static_cast<unsigned long>(cells - m));
    const bool negative = std::popcount(c) % 2 == 1;
    // left^{n-k} descending, right^{N+k+1} ascending.
    left_powers[0] = 1;
    for (unsigned long e = 1; e <= un; ++e) left_powers[e] = left_powers[e - 1] * left;
    mpz_class right_power = ipow(right, ud + 1);
    for (unsigned long k = 0; k <= un; ++k) {
      const mpz_class term = left_powers[un - k] * right_power;
      if (negative) {
        sums[k] -= term;
      } else {
        sums[k] += term;
      }
      right_power *= right;
    }
  }
  Rational total;
  for (unsigned long k = 0; k <= un; ++k) {
    total += binomial(n, static_cast<long>(k)) * Rational(sums[k]) /
             Rational(static_cast<long>(ud + k + 1));
  }
  return total * Rational::pow2(-static_cast<long>(depth) * (depth + n + 1));
}

}  // namespace

UniformSumOracle::UniformSumOracle(int depth_cap) : depth_cap_(depth_cap) {
  if (depth_cap < 1 || depth_cap > kHardDepthLimit) {
    throw std::invalid_argument("UniformSumOracle: depth cap must lie in [1, " +
                                std::to_string(kHardDepthLimit) + "]");
  }
}

void UniformSumOracle::check_depth(int depth) const {
  if (depth < 1 || depth > depth_cap_) {
    throw std::out_of_range("oracle depth " + std::to_string(depth) + " outside [1, " +
                            std::to_string(depth_cap_) + "]");
  }
}

Rational UniformSumOracle::truncated_cdf(int depth, const Rational& x) const {
  check_depth(depth);
  if (x < Rational(0) || x > Rational(1)) {
    throw std::out_of_range("truncated_cdf: x = " + x.to_string() + " outside [0, 1]");
  }
  // x = p/q; (x - C 2^-N)^N = (p 2^N - C q)^N / (q 2^N)^N.
  const std::uint64_t cells = std::uint64_t{1} << depth;
  const mpz_class p = x.numerator();
  const mpz_class q = x.denominator();
  const mpz_class scaled = p * mpz_class(static_cast<unsigned long>(cells));
  const auto ud = static_cast<unsigned long>(depth);
  mpz_class sum;
  for (std::uint64_t c = 0; c < cells; ++c) {
    const mpz_class base = scaled - mpz_class(static_cast<unsigned long>(c)) * q;
    if (sgn(base) <= 0) break;  // base decreases in c
    if (std::popcount(c) % 2 == 1) {
      sum -= ipow(base, ud);
    } else {
      sum += ipow(base, ud);
    }
  }
  const mpz_class denom = ipow(q * mpz_class(static_cast<unsigned long>(cells)), ud);
  return normalizer(depth) * Rational(sum, denom);
}

BoundsPair UniformSumOracle::sandwich(int depth, long k) const {
  check_depth(depth);
  if (k < 0) throw std::out_of_range("sandwich: negative k");
  const Rational x = Rational::pow2(-k);
  Rational shifted = x - Rational::pow2(-depth);
  if (shifted.sign() < 0) shifted = Rational(0);
  return {truncated_cdf(depth, shifted), truncated_cdf(depth, x)};
}

BoundsPair UniformSumOracle::moment_bounds(int depth, long n) const {
  check_depth(depth);
  if (n < 0) throw std::out_of_range("moment_bounds: negative moment order");
  const Rational scale = normalizer(depth);
  return {scale * integrated_pieces(depth, n, 1), scale * integrated_pieces(depth, n, 0)};
}

}  // namespace fabius
