// umbra: command-line front end for the exact operator-calculus library.
//
// Every computation is exact (arbitrary-precision rationals); identical
// argv always produces byte-identical stdout. Exit codes: 0 success,
// 2 usage/parse error, 3 mathematical precondition violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "umbra/expr.hpp"
#include "umbra/printing.hpp"
#include "umbra/sequences.hpp"

using namespace umbra;

namespace {

struct CommonOpts {
  int order = kDefaultOrder;
  std::string factorial = "classical";
  std::vector<std::string> lets;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--order", c.order,
                  "Series truncation / expansion order (default 16, four "
                  "times Maple's default Order of 6)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--factorial", c.factorial,
                  "Factorial system: classical|divided|hyperbolic|gaussian:q")
      ->capture_default_str();
  cmd->add_option("--let", c.lets,
                  "Bind a name to a rational for operator expressions, e.g. "
                  "--let a=1/2 (repeatable)");
  cmd->add_option("--format", c.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "latex"}));
}

FactorialSystem parse_factorial(const std::string& s) {
  if (s == "classical") return FactorialSystem::classical();
  if (s == "divided") return FactorialSystem::divided();
  if (s == "hyperbolic") return FactorialSystem::hyperbolic();
  const std::string prefix = "gaussian:";
  if (s.rfind(prefix, 0) == 0) {
    return FactorialSystem::gaussian(Rational::parse(s.substr(prefix.size())));
  }
  throw Error(Errc::SyntaxError, "unknown factorial system '" + s + "'");
}

// Everything derived from the common flags, resolved once per invocation.
struct Ctx {
  explicit Ctx(const CommonOpts& o)
      : opts(o), fs(parse_factorial(o.factorial)) {
    for (const auto& l : o.lets) {
      const auto eq = l.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw Error(Errc::SyntaxError,
                    "--let expects name=p/q, got '" + l + "'");
      }
      lets.insert_or_assign(l.substr(0, eq),
                            Rational::parse(l.substr(eq + 1)));
    }
  }

  Operator op(const std::string& text) const {
    return resolve_operator(text, lets, fs, opts.order);
  }

  Format fmt() const {
    return opts.format == "latex" ? Format::latex : Format::text;
  }
  bool json() const { return opts.format == "json"; }

  CommonOpts opts;
  FactorialSystem fs;
  std::map<std::string, Rational> lets;
};

std::string render(const Polynomial& p, const Ctx& c) {
  return c.json() ? emit_json(p) : print_expr(p, c.fmt());
}

std::string render(const PolySequence& s, const Ctx& c) {
  if (c.json()) return emit_json(s);
  std::string out;
  for (int n = 0; n < s.size(); ++n) {
    if (n > 0) out += "\n";
    out += print_expr(s[n], c.fmt());
  }
  return out;
}

std::string render(const std::vector<Rational>& coeffs, const Ctx& c) {
  if (c.json()) return emit_json(coeffs);
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ", ";
    out += coeffs[i].str();
  }
  return out;
}

std::string render(const ScalarMatrix& m, const Ctx& c) {
  if (c.json()) return emit_json(m);
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r > 0) out += "\n";
    for (std::size_t k = 0; k < m[r].size(); ++k) {
      if (k > 0) out += ", ";
      out += m[r][k].str();
    }
  }
  return out;
}

PolySequence sequence_from_spec(const std::string& spec, int n,
                                const Ctx& ctx) {
  if (spec == "powers") return PolySequence::powers(n);
  if (spec == "lowerfact") return PolySequence::lower_factorials(n);
  const std::string prefix = "basic:";
  if (spec.rfind(prefix, 0) == 0) {
    return basic_sequence(ctx.op(spec.substr(prefix.size())), n);
  }
  throw Error(Errc::SyntaxError,
              "sequence spec must be powers | lowerfact | basic:<op-expr>, "
              "got '" + spec + "'");
}

std::string render_catalog(const Ctx& c) {
  if (c.json()) {
    nlohmann::ordered_json j;
    j["operators"] = nlohmann::ordered_json::array();
    for (const auto& e : catalog_entries()) {
      nlohmann::ordered_json o;
      o["name"] = e.name;
      o["kind"] = e.kind;
      o["expr"] = e.expr;
      j["operators"].push_back(o);
    }
    return j.dump();
  }
  std::string out;
  for (const auto& e : catalog_entries()) {
    if (!out.empty()) out += "\n";
    std::string line = e.name;
    line.resize(14, ' ');
    line += e.kind;
    line.resize(14 + 18, ' ');
    line += e.expr;
    out += line;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "umbra: exact operator calculus on polynomials.\n"
      "Delta operators, basic/Sheffer/cross sequences, expansion theorems,\n"
      "connection constants and umbral composition, over exact rationals.\n"
      "Default series order is 16 (four times Maple's default Order of 6)."};
  app.require_subcommand(1);

  CommonOpts o_apply;
  std::string apply_op, apply_poly;
  auto* c_apply =
      app.add_subcommand("apply", "Apply an operator to a polynomial");
  c_apply->add_option("--op", apply_op, "Operator expression or catalog name")
      ->required();
  c_apply->add_option("--poly", apply_poly, "Polynomial in x")->required();
  add_common(c_apply, o_apply);

  CommonOpts o_basic;
  std::string basic_op;
  int basic_n = 0;
  auto* c_basic = app.add_subcommand(
      "basic", "Basic sequence p_0..p_N of a delta operator");
  c_basic->add_option("--op", basic_op, "Delta operator")->required();
  c_basic->add_option("--n", basic_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_basic, o_basic);

  CommonOpts o_sheffer;
  std::string sheffer_s, sheffer_q;
  int sheffer_n = 0;
  auto* c_sheffer = app.add_subcommand(
      "sheffer", "Sheffer sequence for an invertible S and a delta Q");
  c_sheffer->add_option("--s", sheffer_s, "Invertible operator S")->required();
  c_sheffer->add_option("--q", sheffer_q, "Delta operator Q")->required();
  c_sheffer->add_option("--n", sheffer_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_sheffer, o_sheffer);

  CommonOpts o_cross;
  std::string cross_s, cross_q, cross_lambda;
  int cross_n = 0;
  auto* c_cross = app.add_subcommand(
      "cross", "Cross-sequence S^lambda applied to the basic sequence of Q");
  c_cross->add_option("--s", cross_s, "Operator S")->required();
  c_cross->add_option("--lambda", cross_lambda, "Exponent (rational)")
      ->required();
  c_cross->add_option("--q", cross_q, "Delta operator Q")->required();
  c_cross->add_option("--n", cross_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_cross, o_cross);

  CommonOpts o_steff;
  std::string steff_s, steff_q;
  int steff_n = 0;
  auto* c_steff = app.add_subcommand(
      "steffensen", "Steffensen sequence (cross-sequence diagonal lambda = n)");
  c_steff->add_option("--s", steff_s, "Operator S")->required();
  c_steff->add_option("--q", steff_q, "Delta operator Q")->required();
  c_steff->add_option("--n", steff_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_steff, o_steff);

  CommonOpts o_eop;
  std::string eop_t, eop_in;
  auto* c_eop = app.add_subcommand(
      "expand-op",
      "Expand a shift-invariant operator in powers of a delta operator "
      "(--order is the expansion order)");
  c_eop->add_option("--t", eop_t, "Operator to expand")->required();
  c_eop->add_option("--in", eop_in, "Delta operator base")->required();
  add_common(c_eop, o_eop);

  CommonOpts o_km;
  std::string km_t;
  auto* c_km = app.add_subcommand(
      "km-expand",
      "Expand a linear operator as sum b_k(x) d^k (explicit-action catalog "
      "names only; --order is the expansion order)");
  c_km->add_option("--t", km_t, "integral0 or bernoulliInt")->required();
  add_common(c_km, o_km);

  CommonOpts o_ep;
  std::string ep_poly, ep_q, ep_s;
  auto* c_ep = app.add_subcommand(
      "expand-poly",
      "Expansion coefficients of a polynomial in a basic (or Sheffer) basis");
  c_ep->add_option("--poly", ep_poly, "Polynomial in x")->required();
  c_ep->add_option("--q", ep_q, "Delta operator Q")->required();
  c_ep->add_option("--s", ep_s, "Optional invertible S (Sheffer basis)");
  add_common(c_ep, o_ep);

  CommonOpts o_cc;
  std::string cc_a, cc_b;
  int cc_n = 0;
  auto* c_cc = app.add_subcommand(
      "cc", "Connection constants expressing sequence A in terms of B");
  c_cc->add_option("--a", cc_a, "Sequence spec: powers|lowerfact|basic:<op>")
      ->required();
  c_cc->add_option("--b", cc_b, "Sequence spec: powers|lowerfact|basic:<op>")
      ->required();
  c_cc->add_option("--n", cc_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_cc, o_cc);

  CommonOpts o_uc;
  std::string uc_a, uc_b;
  int uc_n = 0;
  auto* c_uc = app.add_subcommand("uc", "Umbral composition of two sequences");
  c_uc->add_option("--a", uc_a, "Sequence spec: powers|lowerfact|basic:<op>")
      ->required();
  c_uc->add_option("--b", uc_b, "Sequence spec: powers|lowerfact|basic:<op>")
      ->required();
  c_uc->add_option("--n", uc_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_uc, o_uc);

  CommonOpts o_ui;
  std::string ui_a;
  int ui_n = 0;
  auto* c_ui = app.add_subcommand("ui", "Umbral inverse of a sequence");
  c_ui->add_option("--a", ui_a, "Sequence spec: powers|lowerfact|basic:<op>")
      ->required();
  c_ui->add_option("--n", ui_n, "Top index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(c_ui, o_ui);

  CommonOpts o_cat;
  auto* c_cat = app.add_subcommand("catalog", "List the operator catalog");
  add_common(c_cat, o_cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: Usage: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string out;
    if (*c_apply) {
      Ctx ctx(o_apply);
      out = render(ctx.op(apply_op).apply(parse_polynomial(apply_poly)), ctx);
    } else if (*c_basic) {
      Ctx ctx(o_basic);
      out = render(basic_sequence(ctx.op(basic_op), basic_n), ctx);
    } else if (*c_sheffer) {
      Ctx ctx(o_sheffer);
      out = render(
          sheffer_sequence(ctx.op(sheffer_s), ctx.op(sheffer_q), sheffer_n),
          ctx);
    } else if (*c_cross) {
      Ctx ctx(o_cross);
      out = render(cross_sequence(ctx.op(cross_s),
                                  Rational::parse(cross_lambda),
                                  ctx.op(cross_q), cross_n),
                   ctx);
    } else if (*c_steff) {
      Ctx ctx(o_steff);
      out = render(
          steffensen_sequence(ctx.op(steff_s), ctx.op(steff_q), steff_n), ctx);
    } else if (*c_eop) {
      Ctx ctx(o_eop);
      const OperatorExpansion e =
          expand_operator(ctx.op(eop_t), ctx.op(eop_in), ctx.opts.order);
      out = ctx.json() ? emit_json(e) : print_expr(e, ctx.fmt());
    } else if (*c_km) {
      Ctx ctx(o_km);
      const Operator t = ctx.op(km_t);
      if (t.is_shift_invariant()) {
        throw Error(Errc::UnknownOperator,
                    "km-expand takes an explicit-action catalog name "
                    "(integral0, bernoulliInt), got '" + km_t + "'");
      }
      const KMExpansion e = km_expansion(t, ctx.opts.order, ctx.fs);
      out = ctx.json() ? emit_json(e) : print_expr(e, ctx.fmt());
    } else if (*c_ep) {
      Ctx ctx(o_ep);
      const Polynomial p = parse_polynomial(ep_poly);
      const Operator q = ctx.op(ep_q);
      const std::vector<Rational> coeffs =
          ep_s.empty() ? basic_expansion(p, q)
                       : sheffer_expansion(p, ctx.op(ep_s), q);
      out = render(coeffs, ctx);
    } else if (*c_cc) {
      Ctx ctx(o_cc);
      out = render(connection_constants(sequence_from_spec(cc_a, cc_n, ctx),
                                        sequence_from_spec(cc_b, cc_n, ctx)),
                   ctx);
    } else if (*c_uc) {
      Ctx ctx(o_uc);
      out = render(umbral_compose(sequence_from_spec(uc_a, uc_n, ctx),
                                  sequence_from_spec(uc_b, uc_n, ctx)),
                   ctx);
    } else if (*c_ui) {
      Ctx ctx(o_ui);
      out = render(umbral_inverse(sequence_from_spec(ui_a, ui_n, ctx)), ctx);
    } else if (*c_cat) {
      Ctx ctx(o_cat);
      out = render_catalog(ctx);
    }
    std::cout << out << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  }
}
