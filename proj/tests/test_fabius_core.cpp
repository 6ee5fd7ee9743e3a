#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fabius/fabius.hpp"
#include "fabius/number_theory.hpp"
#include "fabius/oracle.hpp"

using fabius::DRoute;
using fabius::Polynomial;
using fabius::Rational;

namespace {

// Independent exact evaluation of both d-recurrences and the F formulas,
// frozen from a separate implementation written straight from the formulas.
const std::vector<Rational> kF{
    Rational(1),
    Rational(1, 2),
    Rational(5, 72),
    Rational(1, 288),
    Rational(143, 2073600),
    Rational(19, 33177600),
    Rational(1153, 561842749440),
    Rational::parse("583/179789679820800"),
    Rational::parse("1616353/704200217922109440000"),
};

const std::vector<Rational> kD{
    Rational(1, 2),       Rational(5, 36),
    Rational(1, 18),      Rational(143, 5400),
    Rational(19, 1350),   Rational(1153, 142884),
    Rational(583, 119070), Rational(1616353, 520506000),
    Rational(132809, 65063250), Rational::parse("134926369/97620900300"),
    Rational::parse("46840699/48810450150"),
};

const std::vector<Rational> kMu{
    Rational(1, 2),         Rational(13, 36),
    Rational(5, 18),        Rational(1207, 5400),
    Rational(251, 1350),    Rational(22661, 142884),
    Rational(16427, 119070), Rational(63446897, 520506000),
    Rational(7096441, 65063250), Rational::parse("9627163661/97620900300"),
    Rational::parse("4390472951/48810450150"),
};

}  // namespace

TEST_SUITE("fabius dyadic values") {
  TEST_CASE("frozen ladder") {
    for (std::size_t k = 0; k < kF.size(); ++k) {
      CAPTURE(k);
      CHECK(fabius::fabius_dyadic(static_cast<long>(k)) == kF[k]);
    }
  }

  TEST_CASE("frozen ladder lies inside the depth-16 oracle sandwich") {
    const fabius::UniformSumOracle oracle;
    for (long k = 0; k <= 4; ++k) {
      const auto bounds = oracle.sandwich(16, k);
      CAPTURE(k);
      CHECK(bounds.contains(kF[static_cast<std::size_t>(k)]));
      CHECK(bounds.width() <= Rational::pow2(-15));
    }
  }

  TEST_CASE("strictly decreasing and positive through k = 40") {
    for (long k = 0; k <= 40; ++k) {
      CHECK(fabius::fabius_dyadic(k).sign() > 0);
      if (k > 0) CHECK(fabius::fabius_dyadic(k) < fabius::fabius_dyadic(k - 1));
    }
  }

  TEST_CASE("recurrence step rejects missing inputs") {
    const std::vector<Rational> short_table{Rational(1), Rational(1, 2)};
    CHECK_THROWS_AS(fabius::fabius_step(2, short_table), std::invalid_argument);
    CHECK(fabius::fabius_step(1, {}) == Rational(1, 2));
  }
}

TEST_SUITE("d values") {
  TEST_CASE("alternating examples") {
    for (std::size_t i = 0; i < kD.size(); ++i) {
      CAPTURE(i);
      CHECK(fabius::d_value(static_cast<long>(i), DRoute::alternating) == kD[i]);
    }
  }

  TEST_CASE("from_f route agrees exactly for 0 <= i <= 60") {
    for (long i = 0; i <= 60; ++i) {
      CAPTURE(i);
      CHECK(fabius::d_value(i, DRoute::alternating) == fabius::d_value(i, DRoute::from_f));
    }
  }

  TEST_CASE("scaling identity for 0 <= i <= 40") {
    for (long i = 0; i <= 40; ++i) {
      const Rational expected =
          Rational::pow2(i * (i + 1) / 2) * fabius::factorial(i) * fabius::fabius_dyadic(i + 1);
      CHECK(fabius::d_value(i, DRoute::from_f) == expected);
    }
  }

  TEST_CASE("theorem recurrence examples") {
    CHECK(fabius::theorem_d_odd(1) == Rational(5, 36));
    CHECK(fabius::theorem_d_odd(3) == Rational(143, 5400));
    CHECK_THROWS_AS(fabius::theorem_d_odd(2), std::invalid_argument);
    CHECK_THROWS_AS(fabius::theorem_d_odd(-1), std::invalid_argument);
    // d_1 from the single j = -2 term: (-1/360 + 1/60) * 20 * (1/2)
    CHECK(fabius::theorem_d_odd(1, std::vector<Rational>{}) ==
          (Rational(-1, 360) + Rational(1, 60)) * Rational(20) * Rational(1, 2));
  }

  TEST_CASE("theorem route agrees for odd i <= 41") {
    for (long i = 1; i <= 41; i += 2) {
      CAPTURE(i);
      CHECK(fabius::theorem_d_odd(i) == fabius::d_value(i));
    }
  }

  TEST_CASE("pure theorem step with explicit prior values") {
    const std::vector<Rational> odds{kD[1], kD[3], kD[5], kD[7]};
    CHECK(fabius::theorem_d_odd(9, odds) == kD[9]);
    CHECK_THROWS_AS(fabius::theorem_d_odd(9, std::vector<Rational>{kD[1]}), std::invalid_argument);
  }
}

TEST_SUITE("moments") {
  TEST_CASE("examples") {
    for (std::size_t n = 0; n < kMu.size(); ++n) {
      CAPTURE(n);
      CHECK(fabius::moment(static_cast<long>(n)) == kMu[n]);
    }
  }

  TEST_CASE("bounded by 1/(n+1)") {
    for (long n = 0; n <= 40; ++n) {
      const Rational m = fabius::moment(n);
      CHECK(m.sign() > 0);
      CHECK(m < Rational(1, n + 1));
    }
  }
}

TEST_SUITE("coefficients and polynomials") {
  TEST_CASE("coeff_c examples") {
    CHECK(fabius::coeff_c(1, 0) == Rational(1));
    CHECK(fabius::coeff_c(2, 0) == Rational(0));
    CHECK(fabius::coeff_c(2, 1) == Rational(1, 2));
    CHECK(fabius::coeff_c(3, 0) == Rational(1, 144));
    CHECK(fabius::coeff_c(3, 0) == Rational(2) * fabius::fabius_dyadic(3));
    CHECK_THROWS_AS(fabius::coeff_c(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(fabius::coeff_c(2, -1), std::invalid_argument);
  }

  TEST_CASE("coeff_c recurrence c_i(j) = 2^{1-i} c_{i-1}(j-1) / j") {
    for (long i = 2; i <= 20; ++i) {
      for (long j = 1; j < i; ++j) {
        CHECK(fabius::coeff_c(i, j) ==
              Rational::pow2(1 - i) * fabius::coeff_c(i - 1, j - 1) / Rational(j));
      }
    }
  }

  TEST_CASE("parity structure for 1 <= i <= 20") {
    for (long i = 1; i <= 20; ++i) {
      for (long j = 0; j <= i; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(fabius::coeff_c(i, j).is_zero() == (j >= i || (i - j) % 2 == 0));
      }
    }
  }

  TEST_CASE("poly_P examples") {
    CHECK(fabius::poly_P(0).is_zero());
    CHECK(fabius::poly_P(1) == Polynomial{Rational(1)});
    CHECK(fabius::poly_P(2) == Polynomial{Rational(0), Rational(1, 2)});
  }

  TEST_CASE("poly_P by integration matches the closed-form coefficients") {
    for (long i = 1; i <= 20; ++i) {
      const Polynomial p = fabius::poly_P(i);
      CHECK(p.degree() < i);
      for (long j = 0; j <= i; ++j) CHECK(p.coefficient(static_cast<std::size_t>(j)) == fabius::coeff_c(i, j));
    }
  }

  TEST_CASE("derivative relation P_i' = 2^{1-i} P_{i-1}") {
    for (long i = 1; i <= 20; ++i) {
      CHECK(fabius::poly_P(i).derivative() == fabius::poly_P(i - 1) * Rational::pow2(1 - i));
    }
  }

  TEST_CASE("P_{i+2}(1) = F(2^{-i-1})") {
    for (long i = 0; i <= 30; ++i) {
      CAPTURE(i);
      CHECK(fabius::lem1_residual(i).is_zero());
      CHECK(fabius::poly_P(i + 2).evaluate(Rational(1)) == fabius::fabius_dyadic(i + 1));
    }
  }
}

TEST_SUITE("generating-function identities") {
  TEST_CASE("euler identity sum") {
    CHECK(fabius::euler_identity_sum(0) == Rational(1));
    CHECK(fabius::euler_identity_sum(1).is_zero());
    CHECK(fabius::euler_identity_sum(4).is_zero());
    for (long j = 1; j <= 50; ++j) CHECK(fabius::euler_identity_sum(j).is_zero());
  }

  TEST_CASE("bernoulli identity sum") {
    // j = 0: 1 + (1/6)(4 - 16)/2
    CHECK(Rational(1) + Rational(1, 6) * Rational(-12) / Rational(2) == Rational(0));
    for (long j = 0; j <= 50; ++j) {
      CAPTURE(j);
      CHECK(fabius::bernoulli_identity_sum(j).is_zero());
    }
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and calculus") {
    const Polynomial p{Rational(1), Rational(0), Rational(3)};  // 1 + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(Rational(1, 2)) == Rational(7, 4));
    CHECK(p.derivative() == Polynomial{Rational(0), Rational(6)});
    CHECK(p.antiderivative().derivative() == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
    CHECK((p * Rational(2)).coefficient(2) == Rational(6));
    CHECK(p.coefficient(10) == Rational(0));
  }
}
