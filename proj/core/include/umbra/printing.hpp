#pragma once

#include <string>

#include "umbra/operators.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/sequences.hpp"
#include "umbra/series.hpp"

namespace umbra {

enum class Format { text, latex };

// Deterministic rendering: descending powers, exact rationals as p/q,
// expansions end with an order marker O(base^m).
std::string print_expr(const Polynomial& p, Format f = Format::text);
std::string print_expr(const Series& s, Format f = Format::text,
                       const std::string& sym = "d");
std::string print_expr(const OperatorExpansion& e, Format f = Format::text);
std::string print_expr(const KMExpansion& e, Format f = Format::text);

// Stable JSON schemas; rationals serialize as strings, never JSON numbers.
//   polynomial  {"var":"x","coeffs":["c0","c1",...]}        (ascending)
//   sequence    {"polys":[polynomial,...]}
//   matrix      {"rows":[["..."],...]}
//   expansion   {"base":"...","coeffs":["..."],"order":m}
//   km          {"coeffPolys":[polynomial,...],"order":m}
//   coeff list  {"coeffs":["..."]}
std::string emit_json(const Polynomial& p);
std::string emit_json(const PolySequence& s);
std::string emit_json(const ScalarMatrix& m);
std::string emit_json(const OperatorExpansion& e);
std::string emit_json(const KMExpansion& e);
std::string emit_json(const std::vector<Rational>& coeffs);

}  // namespace umbra
