#include <doctest.h>

#include "test_util.hpp"
#include "umbra/expr.hpp"
#include "umbra/sequences.hpp"

using namespace umbra;
using umbra::test::genfunc_basic_oracle;
using umbra::test::P;
using umbra::test::R;
using umbra::test::Rng;
using umbra::test::stirling_subset_oracle;

namespace {

const FactorialSystem kClassical = FactorialSystem::classical();

Operator op(const char* name) { return catalog_operator(name); }

Operator op_a(const char* name, const Rational& a) {
  return catalog_operator(name, {{"a", a}});
}

// e^(d^2): shift-invariant with unit constant term but no valuation-1 part.
Operator exp_d_squared() {
  return elaborate(parse_operator_expr("exp(d^2)"), kDefaultOrder, kClassical);
}

Polynomial binomial_convolution(const PolySequence& left,
                                const PolySequence& right, int n,
                                const Rational& y) {
  Polynomial sum;
  for (int k = 0; k <= n; ++k) {
    sum += left[k] * (kClassical.binomial(n, k) * right[n - k].eval(y));
  }
  return sum;
}

ScalarMatrix matrix_product(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    c[n].resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational s;
      for (std::size_t k = j; k <= n; ++k) {
        if (k < a[n].size() && j < b[k].size()) s += a[n][k] * b[k][j];
      }
      c[n][j] = s;
    }
  }
  return c;
}

bool is_identity(const ScalarMatrix& m) {
  for (std::size_t n = 0; n < m.size(); ++n) {
    for (std::size_t k = 0; k < m[n].size(); ++k) {
      if (m[n][k] != Rational(n == k ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("basic sequence of the forward difference is the lower factorials") {
  const PolySequence p = basic_sequence(op("delta"), 4);
  CHECK(p[4] == P("x^4 - 6*x^3 + 11*x^2 - 6*x"));
  CHECK(p[4] == P("x*(x-1)*(x-2)*(x-3)"));
  CHECK(p == PolySequence::lower_factorials(4));
}

TEST_CASE("basic sequence of d is the power sequence, in every system") {
  for (const auto& fs :
       {FactorialSystem::classical(), FactorialSystem::divided(),
        FactorialSystem::gaussian(Rational(2)), FactorialSystem::hyperbolic()}) {
    const PolySequence p = basic_sequence(catalog_operator("d", {}, fs), 6);
    CHECK(p == PolySequence::powers(6));
  }
}

TEST_CASE("Abel polynomials") {
  const PolySequence p = basic_sequence(op_a("abel", Rational(-1)), 3);
  CHECK(p[3] == P("x*(x+3)^2"));
  CHECK(p[2] == P("x*(x+2)"));
  // general shape x(x - a n)^(n-1) for the abel(a) operator
  const PolySequence q = basic_sequence(op_a("abel", Rational(2)), 5);
  CHECK(q[5] == P("x*(x-10)^4"));
}

TEST_CASE("basic sequences reject non-delta operators") {
  try {
    basic_sequence(op_a("shift", Rational(1)), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDelta);
  }
  CHECK_THROWS_AS(basic_sequence(op("integral0"), 3), Error);
}

TEST_CASE("defining recurrence across operators and systems") {
  for (const auto& fs :
       {FactorialSystem::classical(), FactorialSystem::divided(),
        FactorialSystem::gaussian(Rational(2)), FactorialSystem::hyperbolic()}) {
    const std::vector<Operator> deltas = {
        catalog_operator("d", {}, fs), catalog_operator("delta", {}, fs),
        catalog_operator("nabla", {}, fs),
        catalog_operator("abel", {{"a", Rational(-1)}}, fs)};
    for (const Operator& q : deltas) {
      const PolySequence p = basic_sequence(q, 8);
      CHECK(p[0] == Polynomial(Rational(1)));
      for (int n = 1; n <= 8; ++n) {
        CHECK(q.apply(p[n]) == p[n - 1] * fs.a(n));
        CHECK(p[n].eval(Rational(0)) == Rational(0));
        CHECK(p[n].degree() == n);
      }
    }
  }
}

TEST_CASE("binomial identity, Vandermonde included") {
  const std::vector<Operator> ops = {op("d"), op("delta"), op("nabla"),
                                     op_a("abel", Rational(-1))};
  const std::vector<Rational> ys = {Rational(1), Rational(-2), R("1/3")};
  for (const Operator& q : ops) {
    const PolySequence p = basic_sequence(q, 8);
    for (int n = 0; n <= 8; ++n) {
      for (const Rational& y : ys) {
        CHECK(p[n].shifted(y) == binomial_convolution(p, p, n, y));
      }
    }
  }
}

TEST_CASE("generating function cross-check") {
  const std::vector<Operator> ops = {op("d"), op("delta"), op("nabla"),
                                     op_a("abel", Rational(-1))};
  for (const Operator& q : ops) {
    const PolySequence p = basic_sequence(q, 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(p[n] == genfunc_basic_oracle(q, n));
    }
  }
}

TEST_CASE("Sheffer sequences") {
  // S = identity gives back the basic sequence
  CHECK(sheffer_sequence(op("identity"), op("delta"), 5) ==
        basic_sequence(op("delta"), 5));
  // Bernoulli polynomials are Sheffer for (bernoulli, d)
  const PolySequence b = sheffer_sequence(op("bernoulli"), op("d"), 3);
  CHECK(b[2] == P("x^2 - x + 1/6"));
  CHECK(b[3] == P("x^3 - 3/2*x^2 + 1/2*x"));
  // S = shift(1): s_n = (x-1)^n
  const PolySequence s =
      sheffer_sequence(op_a("shift", Rational(1)), op("d"), 3);
  CHECK(s[3] == P("(x-1)^3"));
  // applying S maps the Sheffer basis back onto the basic basis
  const PolySequence basic = basic_sequence(op("d"), 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(op("bernoulli").apply(b[n]) == basic[n]);
  }
  CHECK_THROWS_AS(sheffer_sequence(op("d"), op("delta"), 3), Error);
}

TEST_CASE("Sheffer identity") {
  const std::vector<Rational> ys = {Rational(1), Rational(-2), R("1/3")};
  const std::vector<std::pair<Operator, Operator>> pairs = {
      {op("bernoulli"), op("d")},
      {op_a("shift", Rational(1)), op("delta")},
  };
  for (const auto& [s_op, q_op] : pairs) {
    const PolySequence s = sheffer_sequence(s_op, q_op, 6);
    const PolySequence p = basic_sequence(q_op, 6);
    for (int n = 0; n <= 6; ++n) {
      for (const Rational& y : ys) {
        CHECK(s[n].shifted(y) == binomial_convolution(s, p, n, y));
      }
    }
  }
}

TEST_CASE("cross-sequences") {
  CHECK(cross_sequence(op_a("shift", Rational(1)), Rational(0), op("delta"),
                       4) == basic_sequence(op("delta"), 4));
  const PolySequence c =
      cross_sequence(op_a("shift", Rational(1)), R("1/2"), op("d"), 2);
  CHECK(c[2] == P("(x + 1/2)^2"));
  const PolySequence e =
      cross_sequence(exp_d_squared(), Rational(1), op("d"), 2);
  CHECK(e[2] == P("x^2 + 2"));
  // classical-only
  const FactorialSystem div = FactorialSystem::divided();
  try {
    cross_sequence(catalog_operator("shift", {{"a", Rational(1)}}, div),
                   Rational(1), catalog_operator("d", {}, div), 2);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NonClassicalFactorial);
  }
}

TEST_CASE("cross identity") {
  const std::vector<Rational> lambdas = {Rational(1), R("1/2"), Rational(-1)};
  const std::vector<Rational> ys = {Rational(1), Rational(-2), R("1/3")};
  const std::vector<Operator> ss = {op_a("shift", Rational(1)),
                                    exp_d_squared()};
  for (const Operator& s : ss) {
    for (const Rational& lam : lambdas) {
      for (const Rational& mu : lambdas) {
        const PolySequence pl = cross_sequence(s, lam, op("d"), 6);
        const PolySequence pm = cross_sequence(s, mu, op("d"), 6);
        const PolySequence psum = cross_sequence(s, lam + mu, op("d"), 6);
        for (int n = 0; n <= 6; ++n) {
          for (const Rational& y : ys) {
            CHECK(psum[n].shifted(y) == binomial_convolution(pl, pm, n, y));
          }
        }
      }
    }
  }
}

TEST_CASE("Steffensen sequences are the cross diagonal") {
  CHECK(steffensen_sequence(op("identity"), op("delta"), 5) ==
        basic_sequence(op("delta"), 5));
  for (const Rational& a : {Rational(1), R("1/2")}) {
    const PolySequence s = steffensen_sequence(op_a("shift", a), op("d"), 5);
    for (int n = 0; n <= 5; ++n) {
      // poweroid shape (x + n a)^n
      CHECK(s[n] == Polynomial::monomial(n).shifted(a * Rational(n)));
    }
  }
  CHECK(steffensen_sequence(op("bernoulli"), op("d"), 0)[0] ==
        Polynomial(Rational(1)));
}

TEST_CASE("basic expansion") {
  const Polynomial sample =
      P("79*x^5 + 56*x^4 + 49*x^3 + 63*x^2 + 57*x - 59");
  const std::vector<Rational> e = basic_expansion(sample, op("delta"));
  const std::vector<Rational> expected = {
      Rational(-59), Rational(304), Rational(1787),
      Rational(2360), Rational(846), Rational(79)};
  CHECK(e == expected);
  // reconstruction
  const PolySequence basis = basic_sequence(op("delta"), 5);
  Polynomial rebuilt;
  for (int k = 0; k <= 5; ++k) rebuilt += basis[k] * e[k];
  CHECK(rebuilt == sample);

  CHECK(basic_expansion(basic_sequence(op("delta"), 3)[3], op("delta")) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(0),
                              Rational(1)});
  CHECK(basic_expansion(P("x^2"), op("d")) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  CHECK(basic_expansion(Polynomial(), op("d")).empty());
}

TEST_CASE("Sheffer expansion") {
  const Polynomial p = P("2*x^3 - x + 4");
  CHECK(sheffer_expansion(p, op("identity"), op("delta")) ==
        basic_expansion(p, op("delta")));
  CHECK(sheffer_expansion(P("x^2 - x + 1/6"), op("bernoulli"), op("d")) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  // constants expand onto the constant term of S's indicator
  CHECK(sheffer_expansion(P("1"), op("bernoulli"), op("d")) ==
        std::vector<Rational>{Rational(1)});
  try {
    sheffer_expansion(p, op("d"), op("delta"));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotInvertible);
  }
}

TEST_CASE("expansion round trips on random polynomials") {
  Rng rng;
  const PolySequence basic = basic_sequence(op("delta"), 8);
  const PolySequence sheff = sheffer_sequence(op("bernoulli"), op("d"), 8);
  const PolySequence basic_d = basic_sequence(op("d"), 8);
  for (int i = 0; i < 20; ++i) {
    const Polynomial p = rng.polynomial(8);
    const std::vector<Rational> be = basic_expansion(p, op("delta"));
    Polynomial from_be;
    for (std::size_t k = 0; k < be.size(); ++k) from_be += basic[k] * be[k];
    CHECK(from_be == p);

    const std::vector<Rational> se =
        sheffer_expansion(p, op("bernoulli"), op("d"));
    Polynomial from_se;
    for (std::size_t k = 0; k < se.size(); ++k) from_se += sheff[k] * se[k];
    CHECK(from_se == p);
  }
}

TEST_CASE("connection constants: Stirling numbers both ways") {
  const PolySequence powers = PolySequence::powers(5);
  const PolySequence lower = PolySequence::lower_factorials(5);

  const ScalarMatrix subset = connection_constants(powers, lower);
  const ScalarMatrix oracle = stirling_subset_oracle(6);
  CHECK(subset == oracle);
  CHECK(subset[4] == std::vector<Rational>{Rational(0), Rational(1),
                                           Rational(7), Rational(6),
                                           Rational(1)});

  const ScalarMatrix cycle = connection_constants(lower, powers);
  CHECK(cycle[4] == std::vector<Rational>{Rational(0), Rational(-6),
                                          Rational(11), Rational(-6),
                                          Rational(1)});
  CHECK(is_identity(matrix_product(subset, cycle)));
  CHECK(is_identity(matrix_product(cycle, subset)));
}

TEST_CASE("connection constants reconstruct and are reflexive") {
  Rng rng;
  for (int i = 0; i < 10; ++i) {
    const PolySequence a = rng.triangular_sequence(7);
    const PolySequence b = rng.triangular_sequence(7);
    const ScalarMatrix c = connection_constants(a, b);
    for (int n = 0; n < 7; ++n) {
      Polynomial sum;
      for (int k = 0; k <= n; ++k) sum += b[k] * c[n][k];
      CHECK(sum == a[n]);
    }
    CHECK(is_identity(connection_constants(a, a)));
  }
  CHECK_THROWS_AS(connection_constants(PolySequence::powers(3),
                                       PolySequence::powers(4)),
                  Error);
}

TEST_CASE("umbral composition") {
  const PolySequence lower = PolySequence::lower_factorials(3);
  const PolySequence powers = PolySequence::powers(3);
  CHECK(umbral_compose(lower, powers) == lower);
  CHECK(umbral_compose(powers, lower) == lower);
  // lower factorials composed with Touchard polynomials give the powers
  const PolySequence touchard = umbral_inverse(lower);
  CHECK(touchard[3] == P("x^3 + 3*x^2 + x"));
  CHECK(touchard[2] == P("x^2 + x"));
  CHECK(umbral_compose(lower, touchard) == powers);
  try {
    umbral_compose(PolySequence::powers(2), PolySequence::powers(3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
}

TEST_CASE("umbral inversion") {
  const PolySequence powers = PolySequence::powers(6);
  CHECK(umbral_inverse(powers) == powers);
  // (x-1)^n and (x+1)^n sequences are mutually inverse
  std::vector<Polynomial> down, up;
  for (int n = 0; n <= 5; ++n) {
    down.push_back(Polynomial::monomial(n).shifted(Rational(-1)));
    up.push_back(Polynomial::monomial(n).shifted(Rational(1)));
  }
  CHECK(umbral_inverse(PolySequence(down)) == PolySequence(up));

  Rng rng;
  for (int i = 0; i < 20; ++i) {
    const PolySequence p = rng.triangular_sequence(8);
    const PolySequence inv = umbral_inverse(p);
    CHECK(umbral_compose(p, inv) == PolySequence::powers(7));
    CHECK(umbral_compose(inv, p) == PolySequence::powers(7));
  }
}

TEST_CASE("umbral composition is associative") {
  Rng rng;
  for (int i = 0; i < 10; ++i) {
    const PolySequence a = rng.triangular_sequence(6);
    const PolySequence b = rng.triangular_sequence(6);
    const PolySequence c = rng.triangular_sequence(6);
    CHECK(umbral_compose(umbral_compose(a, b), c) ==
          umbral_compose(a, umbral_compose(b, c)));
  }
}

TEST_CASE("triangularity is enforced") {
  std::vector<Polynomial> bad = {Polynomial(Rational(1)), P("x^2")};
  CHECK_THROWS_AS(PolySequence(std::move(bad)), Error);
  std::vector<Polynomial> zero_start = {Polynomial()};
  try {
    PolySequence seq(std::move(zero_start));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTriangular);
  }
}
