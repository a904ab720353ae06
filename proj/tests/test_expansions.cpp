#include <doctest.h>

#include "test_util.hpp"
#include "umbra/operators.hpp"
#include "umbra/sequences.hpp"

using namespace umbra;
using umbra::test::P;
using umbra::test::R;
using umbra::test::Rng;
using umbra::test::S;

namespace {
const FactorialSystem kClassical = FactorialSystem::classical();

std::vector<Rational> rat_list(const std::vector<const char*>& strs) {
  std::vector<Rational> out;
  for (const char* s : strs) out.push_back(Rational::parse(s));
  return out;
}
}  // namespace

TEST_CASE("derivative expands in forward differences as log(1 + delta)") {
  const OperatorExpansion e =
      expand_operator(catalog_operator("d"), catalog_operator("delta"), 3);
  CHECK(e.coeffs == rat_list({"0", "1", "-1/2"}));
  CHECK(e.order == 3);
  // a longer prefix matches the log series 0, 1, -1/2, 1/3, -1/4, ...
  const OperatorExpansion e6 =
      expand_operator(catalog_operator("d"), catalog_operator("delta"), 6);
  CHECK(e6.coeffs == rat_list({"0", "1", "-1/2", "1/3", "-1/4", "1/5"}));
}

TEST_CASE("expansion in d recovers the indicator") {
  const OperatorExpansion e = expand_operator(catalog_operator("bernoulli"),
                                              catalog_operator("d"), 6);
  CHECK(e.coeffs ==
        rat_list({"1", "1/2", "1/6", "1/24", "1/120", "1/720"}));
}

TEST_CASE("Gregory coefficients from the averaging operator") {
  const OperatorExpansion e = expand_operator(catalog_operator("bernoulli"),
                                              catalog_operator("delta"), 6);
  CHECK(e.coeffs ==
        rat_list({"1", "1/2", "-1/12", "1/24", "-19/720", "3/160"}));

  // Independent oracle: delta / log(1 + delta) by series division.
  std::vector<Rational> log_coeffs(7);
  for (int k = 1; k <= 6; ++k) {
    log_coeffs[k] = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
  }
  const Series oracle = Series::identity(7) / Series(std::move(log_coeffs));
  CHECK(oracle.coeffs() == e.coeffs);
}

TEST_CASE("expansion reconstructs the operator on low degrees") {
  Rng rng;
  const int m = 10;
  for (int trial = 0; trial < 5; ++trial) {
    const Operator t = Operator::shift_invariant(rng.series(m + 1), kClassical);
    const Operator q =
        Operator::shift_invariant(rng.delta_series(m + 1), kClassical);
    const OperatorExpansion e = expand_operator(t, q, m);
    for (int j = 0; j < m; ++j) {
      const Polynomial mono = Polynomial::monomial(j);
      CHECK(apply(e, mono) == t.apply(mono));
    }
  }
}

TEST_CASE("expansion preconditions") {
  try {
    expand_operator(catalog_operator("d"),
                    catalog_operator("shift", {{"a", Rational(1)}}), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDelta);
  }
  const Operator d_div = catalog_operator("d", {}, FactorialSystem::divided());
  try {
    expand_operator(catalog_operator("d"), d_div, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MixedFactorialSystems);
  }
  CHECK_THROWS_AS(
      expand_operator(catalog_operator("integral0"), catalog_operator("d"), 3),
      Error);
  CHECK_THROWS_AS(
      expand_operator(catalog_operator("d"), catalog_operator("d"), 0), Error);
}

TEST_CASE("generalized expansion works in one non-classical system") {
  // In the divided system the basic sequence of d is x^n and [k]! = 1, so
  // expanding delta's indicator in d must return its own coefficients.
  const FactorialSystem div = FactorialSystem::divided();
  const Operator t = catalog_operator("delta", {}, div);
  const Operator base = catalog_operator("d", {}, div);
  const OperatorExpansion e = expand_operator(t, base, 5);
  CHECK(e.coeffs == rat_list({"0", "1", "1/2", "1/6", "1/24"}));
}

TEST_CASE("integral operator expands with alternating factorial coefficients") {
  const KMExpansion e = km_expansion(catalog_operator("integral0"), 5);
  REQUIRE(e.coeff_polys.size() == 5);
  CHECK(e.coeff_polys[0] == P("x"));
  CHECK(e.coeff_polys[1] == P("-x^2/2"));
  CHECK(e.coeff_polys[2] == P("x^3/6"));
  CHECK(e.coeff_polys[3] == P("-x^4/24"));
  CHECK(e.coeff_polys[4] == P("x^5/120"));
}

TEST_CASE("km expansion of pure operators") {
  const KMExpansion ed = km_expansion(catalog_operator("d"), 4);
  CHECK(ed.coeff_polys[0].is_zero());
  CHECK(ed.coeff_polys[1] == P("1"));
  CHECK(ed.coeff_polys[2].is_zero());
  CHECK(ed.coeff_polys[3].is_zero());

  const Operator mult_x = Operator::explicit_action(
      [](const Polynomial& p) { return p * Polynomial::variable(); }, "x*");
  const KMExpansion ex = km_expansion(mult_x, 4);
  CHECK(ex.coeff_polys[0] == P("x"));
  CHECK(ex.coeff_polys[1].is_zero());
  CHECK(ex.coeff_polys[2].is_zero());
  CHECK(ex.coeff_polys[3].is_zero());
}

TEST_CASE("km reconstruction on monomials and random polynomials") {
  Rng rng;
  for (const char* name : {"integral0", "bernoulliInt"}) {
    const Operator t = catalog_operator(name);
    const KMExpansion e = km_expansion(t, 6);
    for (int n = 0; n < 6; ++n) {
      const Polynomial mono = Polynomial::monomial(n);
      CHECK(apply(e, mono) == t.apply(mono));
    }
    const Polynomial p = rng.polynomial(5);
    CHECK(apply(e, p) == t.apply(p));
  }
}

TEST_CASE("km expansion is classical-only") {
  try {
    km_expansion(catalog_operator("integral0"), 3, FactorialSystem::divided());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonClassicalFactorial);
  }
  const Operator d_div = catalog_operator("d", {}, FactorialSystem::divided());
  CHECK_THROWS_AS(km_expansion(d_div, 3), Error);
}
