#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "fabius/fabius.hpp"
#include "fabius/matrix_forms.hpp"
#include "fabius/number_theory.hpp"

namespace fabius::cli {

namespace {

class Family {
 public:
  explicit Family(std::string name) { result_.name = std::move(name); }

  // Records the first failure only.
  void expect(bool ok, const std::function<std::string()>& detail) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.detail = detail();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<Rational> values_of(const std::vector<TableEntry>& entries) {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.value);
  return out;
}

std::string at(const char* what, long index) { return std::string(what) + " = " + std::to_string(index); }

}  // namespace

std::vector<CheckResult> run_verification(DyadicTable& table, const UniformSumOracle& oracle,
                                          long max_index, int oracle_depth) {
  const long top = max_index;
  // F is read through top + 2; the recurrence for even k also reads k + 1.
  const std::vector<Rational> f = values_of(table.entries(TableKind::f, top + 3));
  // Matrix consistency reads d up to 2*top - 1.
  const long d_top = std::max(top + 1, 2 * top);
  const std::vector<Rational> d = values_of(table.entries(TableKind::d_alternating, d_top));
  const std::vector<Rational> d_ff = values_of(table.entries(TableKind::d_from_f, top));
  const std::vector<Rational> mu = values_of(table.entries(TableKind::mu, top));
  std::vector<Rational> d_thm;
  for (const auto& e : table.entries(TableKind::d_theorem, top)) d_thm.push_back(e.value);

  std::vector<Rational> evens;
  for (long i = 0; i <= d_top; i += 2) evens.push_back(d[static_cast<std::size_t>(i)]);

  std::vector<CheckResult> results;
  auto dv = [&](long i) -> const Rational& { return d[static_cast<std::size_t>(i)]; };
  auto fv = [&](long k) -> const Rational& { return f[static_cast<std::size_t>(k)]; };

  {
    Family fam("anchors");
    fam.expect(fv(0) == Rational(1), [&] { return "F(1) = " + fv(0).to_string(); });
    fam.expect(fv(1) == Rational(1, 2), [&] { return "F(1/2) = " + fv(1).to_string(); });
    fam.expect(dv(0) == Rational(1, 2), [&] { return "d_0 = " + dv(0).to_string(); });
    fam.expect(mu[0] == Rational(1, 2), [&] { return "mu_0 = " + mu[0].to_string(); });
    results.push_back(fam.done());
  }
  {
    Family fam("f-recurrence");
    for (long k = 0; k <= top + 2; ++k) {
      fam.expect(fabius_step(k, f) == fv(k), [&] { return at("k", k); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("f-monotone");
    for (long k = 0; k <= top + 2; ++k) {
      fam.expect(fv(k).sign() > 0, [&] { return at("non-positive at k", k); });
      if (k > 0) fam.expect(fv(k) < fv(k - 1), [&] { return at("not decreasing at k", k); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("d-recurrence");
    for (long i = 0; i <= d_top; ++i) {
      fam.expect(d_alternating_step(i, evens) == dv(i), [&] { return at("i", i); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("d-scaling");
    for (long i = 0; i <= top; ++i) {
      fam.expect(d_from_f_value(i, fv(i + 1)) == d_ff[static_cast<std::size_t>(i)],
                 [&] { return at("i", i); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("route-from-f");
    for (long i = 0; i <= top; ++i) {
      fam.expect(d_ff[static_cast<std::size_t>(i)] == dv(i), [&] { return at("i", i); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("route-theorem");
    for (long i = 1; i <= top; i += 2) {
      const auto& stored = d_thm[static_cast<std::size_t>(i / 2)];
      fam.expect(theorem_d_odd(i, d_thm) == stored, [&] { return at("recurrence at i", i); });
      fam.expect(stored == dv(i), [&] { return at("mismatch at i", i); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("moments");
    for (long n = 0; n <= top; ++n) {
      const Rational& m = mu[static_cast<std::size_t>(n)];
      const Rational cap(1, n + 1);
      fam.expect(m == cap - dv(n), [&] { return at("identity at n", n); });
      fam.expect(m.sign() > 0 && m < cap, [&] { return at("range at n", n); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("coefficients");
    const long limit = std::min<long>(top, 20);
    for (long i = 1; i <= limit; ++i) {
      const Polynomial p = poly_P(i, table);
      const Polynomial p_prev = poly_P(i - 1, table);
      fam.expect(p.derivative() == p_prev * Rational::pow2(1 - i),
                 [&] { return at("derivative relation at i", i); });
      for (long j = 0; j <= i; ++j) {
        const Rational c = coeff_c(i, j, table);
        const bool structural_zero = j >= i || (i - j) % 2 == 0;
        fam.expect(c.is_zero() == structural_zero, [&] { return at("parity at i", i); });
        fam.expect(p.coefficient(static_cast<std::size_t>(j)) == c,
                   [&] { return at("closed form vs integration at i", i); });
      }
    }
    results.push_back(fam.done());
  }
  {
    Family fam("lem1");
    for (long i = 0; i <= top; ++i) {
      fam.expect(lem1_residual(i, table).is_zero(), [&] { return at("i", i); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("number-identities");
    for (long j = 0; j <= top; ++j) {
      fam.expect(euler_identity_sum(j) == Rational(j == 0 ? 1 : 0), [&] { return at("euler sum at j", j); });
      fam.expect(bernoulli_identity_sum(j).is_zero(), [&] { return at("bernoulli sum at j", j); });
    }
    for (long n = 1; n <= top; ++n) {
      Rational residual;
      for (long k = 0; k <= n; ++k) residual += binomial(n + 1, k) * bernoulli(k);
      fam.expect(residual.is_zero(), [&] { return at("bernoulli recurrence at n", n); });
      Rational euler_residual;
      for (long t = 0; t <= n; ++t) euler_residual += binomial(2 * n, 2 * t) * euler_even(t);
      fam.expect(euler_residual.is_zero(), [&] { return at("euler recurrence at j", n); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("stacked-inverse");
    for (long i = 0; i <= top; ++i) {
      const RationalMatrix a = stacked_matrix(i);
      const RationalMatrix inv = stacked_inverse(i);
      const RationalMatrix id = RationalMatrix::identity(a.rows());
      fam.expect(a * inv == id && inv * a == id, [&] { return at("i", i); });
    }
    results.push_back(fam.done());
  }
  {
    Family theorem("theorem-row");
    Family consistency("matrix-consistency");
    for (long i = 1; i <= top; ++i) {
      const RationalMatrix g = build_G(i);
      theorem.expect((g.row(g.rows()) - closed_form_row(i)).is_zero(), [&] { return at("i", i); });
      RationalVector input(static_cast<std::size_t>(i));
      RationalVector expected(static_cast<std::size_t>(i));
      input(1) = Rational(2) * dv(0);
      for (long r = 2; r <= i; ++r) input(static_cast<std::size_t>(r)) = dv(2 * r - 3);
      for (long r = 1; r <= i; ++r) expected(static_cast<std::size_t>(r)) = dv(2 * r - 1);
      consistency.expect(g * input == expected, [&] { return at("i", i); });
    }
    results.push_back(theorem.done());
    results.push_back(consistency.done());
  }
  {
    Family fam("oracle-f");
    for (long k = 0; k <= std::min<long>(top + 1, oracle_depth); ++k) {
      fam.expect(oracle.sandwich(oracle_depth, k).contains(fv(k)), [&] { return at("k", k); });
    }
    results.push_back(fam.done());
  }
  {
    Family fam("oracle-moments");
    for (long n = 0; n <= std::min<long>(top, 10); ++n) {
      fam.expect(oracle.moment_bounds(oracle_depth, n).contains(mu[static_cast<std::size_t>(n)]),
                 [&] { return at("n", n); });
    }
    results.push_back(fam.done());
  }
  return results;
}

}  // namespace fabius::cli
