#include <doctest.h>
#include <json.hpp>

#include "test_util.hpp"
#include "umbra/printing.hpp"

using namespace umbra;
using umbra::test::P;
using umbra::test::R;
using umbra::test::Rng;
using umbra::test::S;

TEST_CASE("polynomial text rendering") {
  CHECK(print_expr(Polynomial()) == "0");
  CHECK(print_expr(P("3*x^2 + 3*x + 1")) == "3*x^2 + 3*x + 1");
  CHECK(print_expr(P("x*(x-1)*(x-2)*(x-3)")) ==
        "x^4 - 6*x^3 + 11*x^2 - 6*x");
  CHECK(print_expr(P("x^2 - x + 1/6")) == "x^2 - x + 1/6");
  CHECK(print_expr(P("1 - x")) == "-x + 1");
  CHECK(print_expr(P("-59")) == "-59");
  CHECK(print_expr(P("-2/3*x^5")) == "-2/3*x^5");
}

TEST_CASE("series and expansion rendering") {
  CHECK(print_expr(S({"1", "1/2", "1/6"})) == "1 + 1/2*d + 1/6*d^2 + O(d^3)");
  CHECK(print_expr(Series::zero(3)) == "0 + O(d^3)");

  const OperatorExpansion oe =
      expand_operator(catalog_operator("d"), catalog_operator("delta"), 3);
  CHECK(print_expr(oe) == "delta - 1/2*delta^2 + O(delta^3)");

  const KMExpansion km = km_expansion(catalog_operator("integral0"), 3);
  CHECK(print_expr(km) == "(x) + (-1/2*x^2)*d + (1/6*x^3)*d^2 + O(d^3)");
}

TEST_CASE("latex rendering") {
  CHECK(print_expr(P("x^2 - x + 1/6"), Format::latex) ==
        "x^{2} - x + \\frac{1}{6}");
  CHECK(print_expr(P("3*x^2"), Format::latex) == "3 x^{2}");
  const OperatorExpansion oe =
      expand_operator(catalog_operator("d"), catalog_operator("delta"), 3);
  CHECK(print_expr(oe, Format::latex) ==
        "delta - \\frac{1}{2} delta^{2} + O(delta^{3})");
}

TEST_CASE("json schemas are pinned") {
  CHECK(emit_json(Polynomial()) == R"({"var":"x","coeffs":[]})");
  CHECK(emit_json(P("x^2 - x + 1/6")) ==
        R"({"var":"x","coeffs":["1/6","-1","1"]})");

  const OperatorExpansion oe =
      expand_operator(catalog_operator("d"), catalog_operator("delta"), 3);
  CHECK(emit_json(oe) ==
        R"({"base":"exp(d) - 1","coeffs":["0","1","-1/2"],"order":3})");

  const ScalarMatrix stirling = connection_constants(
      PolySequence::powers(4), PolySequence::lower_factorials(4));
  const std::string js = emit_json(stirling);
  const auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["rows"][4] ==
        nlohmann::json::parse(R"(["0","1","7","6","1"])"));

  const PolySequence powers = PolySequence::powers(1);
  CHECK(emit_json(powers) ==
        R"({"polys":[{"var":"x","coeffs":["1"]},{"var":"x","coeffs":["0","1"]}]})");

  const KMExpansion km = km_expansion(catalog_operator("d"), 2);
  CHECK(emit_json(km) ==
        R"({"coeffPolys":[{"var":"x","coeffs":[]},{"var":"x","coeffs":["1"]}],"order":2})");

  CHECK(emit_json(std::vector<Rational>{Rational(-59), R("1/2")}) ==
        R"({"coeffs":["-59","1/2"]})");
}

TEST_CASE("json polynomials round trip") {
  Rng rng;
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = rng.polynomial(8);
    const auto parsed = nlohmann::json::parse(emit_json(p));
    CHECK(parsed["var"] == "x");
    std::vector<Rational> coeffs;
    for (const auto& c : parsed["coeffs"]) {
      coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    CHECK(Polynomial(std::move(coeffs)) == p);
  }
}

TEST_CASE("rendering is deterministic") {
  const Polynomial p = P("x^3 - 7/3*x + 2");
  CHECK(print_expr(p) == print_expr(p));
  CHECK(emit_json(p) == emit_json(p));
}
