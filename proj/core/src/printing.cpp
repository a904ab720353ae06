#include "umbra/printing.hpp"

#include <json.hpp>

namespace umbra {

namespace {

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  const Rational a = r.abs();
  const std::string body = "\\frac{" + a.raw().get_num().get_str() + "}{" +
                           a.raw().get_den().get_str() + "}";
  return r.sign() < 0 ? "-" + body : body;
}

std::string magnitude(const Rational& r, Format f) {
  return f == Format::latex ? latex_rational(r.abs()) : r.abs().str();
}

std::string power_of(const std::string& sym, int k, Format f) {
  if (k == 1) return sym;
  if (f == Format::latex) return sym + "^{" + std::to_string(k) + "}";
  return sym + "^" + std::to_string(k);
}

// One signed term "c * sym^k" appended in the common style: leading terms
// carry a bare '-', later ones ' + ' / ' - '; unit coefficients are dropped.
void append_term(std::string& out, const Rational& c, int k,
                 const std::string& sym, Format f) {
  const bool first = out.empty();
  if (first) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  if (k == 0) {
    out += magnitude(c, f);
    return;
  }
  const std::string xp = power_of(sym, k, f);
  if (c.abs().is_one()) {
    out += xp;
  } else {
    out += magnitude(c, f) + (f == Format::latex ? " " : "*") + xp;
  }
}

}  // namespace

std::string print_expr(const Polynomial& p, Format f) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i).is_zero()) continue;
    append_term(out, p.coeff(i), i, "x", f);
  }
  return out;
}

std::string print_expr(const Series& s, Format f, const std::string& sym) {
  std::string out;
  for (int k = 0; k < s.order(); ++k) {
    if (s[k].is_zero()) continue;
    append_term(out, s[k], k, sym, f);
  }
  if (out.empty()) out = "0";
  return out + " + " + "O(" + power_of(sym, s.order(), f) + ")";
}

std::string print_expr(const OperatorExpansion& e, Format f) {
  std::string base = e.base.name().empty() ? std::string("Q") : e.base.name();
  // composite labels get parenthesized so powers stay unambiguous
  if (base.find_first_of("+-*/^ ") != std::string::npos) {
    base = "(" + base + ")";
  }
  std::string out;
  for (int k = 0; k < e.order; ++k) {
    if (e.coeffs[k].is_zero()) continue;
    append_term(out, e.coeffs[k], k, base, f);
  }
  if (out.empty()) out = "0";
  return out + " + O(" + power_of(base, e.order, f) + ")";
}

std::string print_expr(const KMExpansion& e, Format f) {
  std::string out;
  for (int k = 0; k < e.order; ++k) {
    if (e.coeff_polys[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + print_expr(e.coeff_polys[k], f) + ")";
    if (k >= 1) out += (f == Format::latex ? " " : "*") + power_of("d", k, f);
  }
  if (out.empty()) out = "0";
  return out + " + O(" + power_of("d", e.order, f) + ")";
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coeff_strings(const std::vector<Rational>& cs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cs) arr.push_back(c.str());
  return arr;
}

ordered_json polynomial_json(const Polynomial& p) {
  ordered_json j;
  j["var"] = "x";
  j["coeffs"] = coeff_strings(p.coeffs());
  return j;
}

}  // namespace

std::string emit_json(const Polynomial& p) { return polynomial_json(p).dump(); }

std::string emit_json(const PolySequence& s) {
  ordered_json j;
  j["polys"] = ordered_json::array();
  for (const auto& p : s.polys()) j["polys"].push_back(polynomial_json(p));
  return j.dump();
}

std::string emit_json(const ScalarMatrix& m) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& row : m) j["rows"].push_back(coeff_strings(row));
  return j.dump();
}

std::string emit_json(const OperatorExpansion& e) {
  ordered_json j;
  j["base"] = e.base.expr().empty() ? e.base.name() : e.base.expr();
  j["coeffs"] = coeff_strings(e.coeffs);
  j["order"] = e.order;
  return j.dump();
}

std::string emit_json(const KMExpansion& e) {
  ordered_json j;
  j["coeffPolys"] = ordered_json::array();
  for (const auto& p : e.coeff_polys) j["coeffPolys"].push_back(polynomial_json(p));
  j["order"] = e.order;
  return j.dump();
}

std::string emit_json(const std::vector<Rational>& coeffs) {
  ordered_json j;
  j["coeffs"] = coeff_strings(coeffs);
  return j.dump();
}

}  // namespace umbra
