#include "fabius/number_theory.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fabius {

namespace {

void require_non_negative(long n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative argument " + std::to_string(n));
  }
}

// Append-only prefix cache of a sequence defined by a recurrence over its
// own earlier terms. `extend` is called with the lock held.
template <typename Extend>
class PrefixMemo {
 public:
  explicit PrefixMemo(Extend extend) : extend_(std::move(extend)) {}

  Rational at(std::size_t index) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= index) values_.push_back(extend_(values_));
    return values_[index];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
  Extend extend_;
};

Rational next_bernoulli(const std::vector<Rational>& b) {
  const long n = static_cast<long>(b.size());
  if (n == 0) return Rational(1);
  Rational sum;
  for (long k = 0; k < n; ++k) sum += binomial(n + 1, k) * b[static_cast<std::size_t>(k)];
  return -sum / Rational(n + 1);
}

Rational next_euler_even(const std::vector<Rational>& e) {
  const long j = static_cast<long>(e.size());
  if (j == 0) return Rational(1);
  Rational sum;
  for (long t = 0; t < j; ++t) sum += binomial(2 * j, 2 * t) * e[static_cast<std::size_t>(t)];
  return -sum;
}

auto& bernoulli_memo() {
  static PrefixMemo memo(next_bernoulli);
  return memo;
}

auto& euler_memo() {
  static PrefixMemo memo(next_euler_even);
  return memo;
}

}  // namespace

Rational binomial(long n, long k) {
  require_non_negative(n, "binomial");
  if (k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational factorial(long n) {
  require_non_negative(n, "factorial");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

Rational bernoulli(long n) {
  require_non_negative(n, "bernoulli");
  return bernoulli_memo().at(static_cast<std::size_t>(n));
}

Rational euler_even(long m) {
  require_non_negative(m, "euler_even");
  return euler_memo().at(static_cast<std::size_t>(m));
}

Rational euler(long n) {
  require_non_negative(n, "euler");
  if (n % 2 == 1) return Rational(0);
  return euler_even(n / 2);
}

Rational zeta_neg_odd(long m) {
  require_non_negative(m, "zeta_neg_odd");
  return -bernoulli(2 * m + 2) / Rational(2 * m + 2);
}

Rational zeta_at(long s) {
  if (s >= 0 || s % 2 == 0) {
    throw std::invalid_argument("zeta_at: only negative odd arguments are supported, got " +
                                std::to_string(s));
  }
  return zeta_neg_odd((-s - 1) / 2);
}

}  // namespace fabius
