#pragma once

#include "fabius/rational.hpp"

namespace fabius {

struct BoundsPair {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
};

/*
 * Brute-force check on F independent of the recurrences.
 *
 * On [0,1], F is the distribution function of S = sum_{n>=1} 2^-n U_n with
 * U_n iid uniform on [0,1]. Truncating after N terms gives
 *
 *   F_N(x) = 2^{N(N+1)/2} / N! * sum_{C=0}^{2^N-1} (-1)^{popcount C} (x - C 2^-N)_+^N
 *
 * (inclusion-exclusion over subsets of {1..N}; each subset sum is a distinct
 * multiple of 2^-N). Since the dropped tail lies in [0, 2^-N],
 *
 *   F_N(x - 2^-N) <= F(x) <= F_N(x).
 *
 * Cost is 2^N big-integer powers per evaluation, so depth is capped.
 */
class UniformSumOracle {
 public:
  static constexpr int kDefaultDepthCap = 16;
  static constexpr int kHardDepthLimit = 30;

  // Throws std::invalid_argument unless 1 <= depth_cap <= kHardDepthLimit.
  explicit UniformSumOracle(int depth_cap = kDefaultDepthCap);

  int depth_cap() const { return depth_cap_; }

  // F_N(x) exactly. Throws std::out_of_range for N outside [1, cap] or
  // x outside [0, 1].
  Rational truncated_cdf(int depth, const Rational& x) const;

  // (F_N(max(0, 2^-k - 2^-N)), F_N(2^-k)), which brackets F(2^-k).
  BoundsPair sandwich(int depth, long k) const;

  // Brackets mu_n = int_0^1 F(x) x^n dx by integrating F_N(x - 2^-N) and
  // F_N(x) against x^n exactly. Width is at most 2^-N.
  BoundsPair moment_bounds(int depth, long n) const;

 private:
  void check_depth(int depth) const;

  int depth_cap_;
};

}  // namespace fabius
