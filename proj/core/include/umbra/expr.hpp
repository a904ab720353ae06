#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Expression tree for the textual grammar shared by operator and polynomial
// input:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := integer | 'd' | 'x' | name '(' args ')' | name | '(' expr ')'
//   args   := expr (',' expr)*
//
// '^' binds tightest, then '*' and '/', then '+' and '-'; all binary
// operators are left-associative. Whitespace is insignificant. Rationals are
// written p/q (two integer literals and a division). In operator expressions
// free names must be catalog operators or bound to rationals by the caller;
// in polynomial expressions the only symbol is x.
struct ExprNode {
  enum class Kind {
    rational,
    symbol_d,
    symbol_x,
    add,
    sub,
    mul,
    div,
    pow,
    call,  // exp or log
    atom,  // catalog operator, parameters constant-folded
  };

  Kind kind;
  std::size_t offset = 0;  // byte offset in the source text
  Rational value;          // rational
  long exponent = 0;       // pow
  std::string name;        // call or atom
  std::shared_ptr<const ExprNode> lhs, rhs;  // children; call argument in lhs
  std::vector<Rational> params;              // atom parameters
  std::string source;                        // root only: the input text
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr parse_operator_expr(std::string_view text,
                            const std::map<std::string, Rational>& lets = {});

Polynomial parse_polynomial(std::string_view text);

// Bottom-up evaluation of an operator expression into an indicator series at
// the given order, wrapped as a shift-invariant operator whose recipe
// re-elaborates the tree when a higher order is needed.
Operator elaborate(const ExprPtr& tree, int order, const FactorialSystem& fs);

// Parse + elaborate; a bare catalog name (with optional parameters) resolves
// through the catalog instead, so explicit-action operators are reachable.
Operator resolve_operator(std::string_view text,
                          const std::map<std::string, Rational>& lets,
                          const FactorialSystem& fs, int order = kDefaultOrder);

}  // namespace umbra
