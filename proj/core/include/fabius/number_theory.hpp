#pragma once

#include "fabius/rational.hpp"

namespace fabius {

// C(n, k) for n >= 0; zero when k < 0 or k > n.
// Throws std::invalid_argument when n < 0.
Rational binomial(long n, long k);

// n! for n >= 0.
Rational factorial(long n);

/// Bernoulli number B_n with the B_1 = -1/2 convention, from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0 and B_0 = 1. Prefixes are memoized
/// process-wide behind a mutex.
Rational bernoulli(long n);

/// Euler number E_{2m} from E_0 = 1 and sum_{t=0}^{j} C(2j, 2t) E_{2t} = 0.
Rational euler_even(long m);

/// Euler number E_n for any n >= 0 (zero at odd n).
Rational euler(long n);

/// zeta(-(2m+1)) = -B_{2m+2} / (2m+2).
Rational zeta_neg_odd(long m);

/// zeta(s) at a negative odd integer s = -1, -3, -5, ...
/// Throws std::invalid_argument for any other s.
Rational zeta_at(long s);

}  // namespace fabius
