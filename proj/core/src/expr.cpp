#include "umbra/expr.hpp"

#include <cctype>
#include <utility>

namespace umbra {

namespace {

// Parameter count of a catalog atom, -1 when the name is not in the catalog.
// 'd' is not listed: it lexes as the reserved derivative symbol.
int catalog_arity(const std::string& name) {
  if (name == "shift" || name == "abel") return 1;
  if (name == "delta" || name == "nabla" || name == "bernoulli" ||
      name == "identity" || name == "integral0" || name == "bernoulliInt") {
    return 0;
  }
  return -1;
}

struct Token {
  enum class Kind {
    integer,
    name,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    comma,
    end,
  };
  Kind kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::Kind::integer, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Kind::name, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '/': k = Token::Kind::slash; break;
      case '^': k = Token::Kind::caret; break;
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      case ',': k = Token::Kind::comma; break;
      default:
        throw ParseError(Errc::SyntaxError,
                         std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Token::Kind::end, s.size(), ""});
  return out;
}

std::shared_ptr<ExprNode> make_node(ExprNode::Kind kind, std::size_t offset) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->offset = offset;
  return n;
}

ExprPtr make_rational(Rational v, std::size_t offset) {
  auto n = make_node(ExprNode::Kind::rational, offset);
  n->value = std::move(v);
  return n;
}

enum class Mode { op, poly };

class Parser {
 public:
  Parser(std::string_view text, Mode mode,
         const std::map<std::string, Rational>* lets)
      : text_(text), mode_(mode), lets_(lets), tokens_(lex(text)) {}

  ExprPtr parse() {
    ExprPtr root = parse_expr();
    if (peek().kind != Token::Kind::end) {
      throw ParseError(Errc::SyntaxError, "unexpected token '" + peek().text + "'",
                       peek().offset);
    }
    auto owned = std::const_pointer_cast<ExprNode>(root);
    owned->source = trimmed_source();
    return owned;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Token::Kind k, const char* what) {
    if (!accept(k)) {
      throw ParseError(Errc::SyntaxError, std::string("expected ") + what,
                       peek().offset);
    }
  }

  std::string trimmed_source() const {
    std::size_t b = 0, e = text_.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text_[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text_[e - 1]))) --e;
    return std::string(text_.substr(b, e - b));
  }

  ExprPtr parse_expr() {
    bool negate = false;
    std::size_t sign_offset = peek().offset;
    if (accept(Token::Kind::plus)) {
    } else if (accept(Token::Kind::minus)) {
      negate = true;
    }
    ExprPtr node = parse_term();
    if (negate) {
      auto neg = make_node(ExprNode::Kind::sub, sign_offset);
      neg->lhs = make_rational(Rational(0), sign_offset);
      neg->rhs = node;
      node = neg;
    }
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::Kind::plus || t.kind == Token::Kind::minus) {
        advance();
        auto bin = make_node(t.kind == Token::Kind::plus ? ExprNode::Kind::add
                                                         : ExprNode::Kind::sub,
                             t.offset);
        bin->lhs = node;
        bin->rhs = parse_term();
        node = bin;
      } else {
        return node;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr node = parse_factor();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::Kind::star || t.kind == Token::Kind::slash) {
        advance();
        auto bin = make_node(t.kind == Token::Kind::star ? ExprNode::Kind::mul
                                                         : ExprNode::Kind::div,
                             t.offset);
        bin->lhs = node;
        bin->rhs = parse_factor();
        node = bin;
      } else {
        return node;
      }
    }
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_base();
    if (!accept(Token::Kind::caret)) return base;
    const std::size_t at = peek().offset;
    bool neg = false;
    if (accept(Token::Kind::minus)) {
      neg = true;
    } else {
      accept(Token::Kind::plus);
    }
    if (peek().kind != Token::Kind::integer) {
      throw ParseError(Errc::SyntaxError, "expected integer exponent",
                       peek().offset);
    }
    const std::string digits = advance().text;
    long e = 0;
    try {
      e = std::stol(digits);
    } catch (const std::exception&) {
      throw ParseError(Errc::SyntaxError, "exponent out of range", at);
    }
    auto node = make_node(ExprNode::Kind::pow, at);
    node->lhs = base;
    node->exponent = neg ? -e : e;
    return node;
  }

  ExprPtr parse_base() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::integer:
        advance();
        return make_rational(Rational::parse(t.text), t.offset);
      case Token::Kind::lparen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(Token::Kind::rparen, "')'");
        return inner;
      }
      case Token::Kind::name:
        advance();
        return parse_name(t);
      default:
        throw ParseError(Errc::SyntaxError, "expected a value", t.offset);
    }
  }

  ExprPtr parse_name(const Token& t) {
    const std::string& name = t.text;
    if (mode_ == Mode::op && name == "d") {
      return make_node(ExprNode::Kind::symbol_d, t.offset);
    }
    if (mode_ == Mode::poly) {
      if (name == "x") return make_node(ExprNode::Kind::symbol_x, t.offset);
      if (name == "exp" || name == "log" || catalog_arity(name) >= 0) {
        throw ParseError(Errc::NonPolynomial,
                         "'" + name + "' is not a polynomial construct",
                         t.offset);
      }
      throw ParseError(Errc::SyntaxError, "unknown name '" + name + "'",
                       t.offset);
    }
    // Operator mode.
    if (peek().kind == Token::Kind::lparen) {
      if (name == "exp" || name == "log") {
        advance();
        auto node = make_node(ExprNode::Kind::call, t.offset);
        node->name = name;
        node->lhs = parse_expr();
        expect(Token::Kind::rparen, "')'");
        return node;
      }
      const int arity = catalog_arity(name);
      if (arity < 0) {
        throw ParseError(Errc::UnboundName, "unknown function '" + name + "'",
                         t.offset);
      }
      advance();
      std::vector<Rational> params;
      if (peek().kind != Token::Kind::rparen) {
        params.push_back(const_param(parse_expr()));
        while (accept(Token::Kind::comma)) {
          params.push_back(const_param(parse_expr()));
        }
      }
      expect(Token::Kind::rparen, "')'");
      if (static_cast<int>(params.size()) != arity) {
        throw ParseError(Errc::MissingParam,
                         "operator '" + name + "' takes " +
                             std::to_string(arity) + " parameter(s)",
                         t.offset);
      }
      auto node = make_node(ExprNode::Kind::atom, t.offset);
      node->name = name;
      node->params = std::move(params);
      return node;
    }
    if (lets_ != nullptr) {
      auto it = lets_->find(name);
      if (it != lets_->end()) return make_rational(it->second, t.offset);
    }
    const int arity = catalog_arity(name);
    if (arity == 0) {
      auto node = make_node(ExprNode::Kind::atom, t.offset);
      node->name = name;
      return node;
    }
    if (arity > 0) {
      throw ParseError(Errc::MissingParam,
                       "operator '" + name + "' takes " + std::to_string(arity) +
                           " parameter(s)",
                       t.offset);
    }
    throw ParseError(Errc::UnboundName, "unbound name '" + name + "'",
                     t.offset);
  }

  // Parameters of catalog atoms must fold to rationals.
  Rational const_param(const ExprPtr& e) {
    switch (e->kind) {
      case ExprNode::Kind::rational: return e->value;
      case ExprNode::Kind::add: return const_param(e->lhs) + const_param(e->rhs);
      case ExprNode::Kind::sub: return const_param(e->lhs) - const_param(e->rhs);
      case ExprNode::Kind::mul: return const_param(e->lhs) * const_param(e->rhs);
      case ExprNode::Kind::div: return const_param(e->lhs) / const_param(e->rhs);
      case ExprNode::Kind::pow: return pow(const_param(e->lhs), e->exponent);
      default:
        throw ParseError(Errc::SyntaxError,
                         "operator parameter must be a rational", e->offset);
    }
  }

  std::string_view text_;
  Mode mode_;
  const std::map<std::string, Rational>* lets_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Re-raise a library error with the source position attached.
template <typename F>
auto at_offset(std::size_t offset, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(),
                e.message() + " (at offset " + std::to_string(offset) + ")");
  }
}

Series eval_series(const ExprNode& n, int order, const FactorialSystem& fs) {
  switch (n.kind) {
    case ExprNode::Kind::rational:
      return Series::constant(n.value, order);
    case ExprNode::Kind::symbol_d:
      return Series::identity(order);
    case ExprNode::Kind::symbol_x:
      throw ParseError(Errc::SyntaxError, "'x' in operator expression",
                       n.offset);
    case ExprNode::Kind::add:
      return eval_series(*n.lhs, order, fs) + eval_series(*n.rhs, order, fs);
    case ExprNode::Kind::sub:
      return eval_series(*n.lhs, order, fs) - eval_series(*n.rhs, order, fs);
    case ExprNode::Kind::mul:
      return eval_series(*n.lhs, order, fs) * eval_series(*n.rhs, order, fs);
    case ExprNode::Kind::div:
      return at_offset(n.offset, [&] {
        return eval_series(*n.lhs, order, fs) / eval_series(*n.rhs, order, fs);
      });
    case ExprNode::Kind::pow:
      return at_offset(n.offset, [&] {
        return pow(eval_series(*n.lhs, order, fs), n.exponent);
      });
    case ExprNode::Kind::call:
      return at_offset(n.offset, [&] {
        const Series arg = eval_series(*n.lhs, order, fs);
        return n.name == "exp" ? exp(arg) : log(arg);
      });
    case ExprNode::Kind::atom:
      return at_offset(n.offset, [&] {
        std::map<std::string, Rational> params;
        if (!n.params.empty()) params.emplace("a", n.params[0]);
        const Operator op = catalog_operator(n.name, params, fs, order);
        if (!op.is_shift_invariant()) {
          fail(Errc::NotShiftInvariant,
               "'" + n.name + "' cannot appear inside an operator expression");
        }
        return op.indicator(order);
      });
  }
  fail(Errc::SyntaxError, "corrupt expression tree");
}

Polynomial eval_poly(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::rational:
      return Polynomial(n.value);
    case ExprNode::Kind::symbol_x:
      return Polynomial::variable();
    case ExprNode::Kind::add:
      return eval_poly(*n.lhs) + eval_poly(*n.rhs);
    case ExprNode::Kind::sub:
      return eval_poly(*n.lhs) - eval_poly(*n.rhs);
    case ExprNode::Kind::mul:
      return eval_poly(*n.lhs) * eval_poly(*n.rhs);
    case ExprNode::Kind::div: {
      const Polynomial denom = eval_poly(*n.rhs);
      if (denom.degree() != 0) {
        throw ParseError(Errc::NonPolynomial, "division by a non-constant",
                         n.offset);
      }
      return eval_poly(*n.lhs) * (Rational(1) / denom.coeff(0));
    }
    case ExprNode::Kind::pow: {
      const Polynomial base = eval_poly(*n.lhs);
      long e = n.exponent;
      if (e < 0) {
        if (base.degree() != 0) {
          throw ParseError(Errc::NonPolynomial,
                           "negative power of a non-constant", n.offset);
        }
        return Polynomial(pow(base.coeff(0), e));
      }
      Polynomial acc(Rational(1));
      Polynomial b = base;
      while (e > 0) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e > 0) b = b * b;
      }
      return acc;
    }
    default:
      throw ParseError(Errc::NonPolynomial, "not a polynomial construct",
                       n.offset);
  }
}

}  // namespace

ExprPtr parse_operator_expr(std::string_view text,
                            const std::map<std::string, Rational>& lets) {
  return Parser(text, Mode::op, &lets).parse();
}

Polynomial parse_polynomial(std::string_view text) {
  return eval_poly(*Parser(text, Mode::poly, nullptr).parse());
}

Operator elaborate(const ExprPtr& tree, int order, const FactorialSystem& fs) {
  if (order < 1) fail(Errc::OutOfRange, "order must be positive");
  Series s = eval_series(*tree, order, fs);
  auto recipe = [tree, fs](int k) { return eval_series(*tree, k, fs); };
  const std::string label = tree->source.empty() ? "<expr>" : tree->source;
  return Operator::shift_invariant(std::move(s), fs, recipe, label, label);
}

Operator resolve_operator(std::string_view text,
                          const std::map<std::string, Rational>& lets,
                          const FactorialSystem& fs, int order) {
  ExprPtr tree = parse_operator_expr(text, lets);
  if (tree->kind == ExprNode::Kind::atom) {
    std::map<std::string, Rational> params;
    if (!tree->params.empty()) params.emplace("a", tree->params[0]);
    return catalog_operator(tree->name, params, fs, order);
  }
  return elaborate(tree, order, fs);
}

}  // namespace umbra
