#pragma once

// Profile expressions f(u).
//
// Grammar (whitespace insignificant):
//
//   expr    := term   (('+' | '-') term)*
//   term    := unary  (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'u' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//
// so '^' binds tighter than unary minus ("-u^2" is -(u^2)), and a minus
// sign may open an exponent ("2^-u"). Implicit multiplication is not
// accepted. Functions: sin cos exp ln sinh cosh tanh sqrt abs.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pisurf/error.hpp"
#include "pisurf/jet.hpp"

namespace pisurf {

enum class ExprOp {
  Const, Var,
  Neg, Sin, Cos, Exp, Ln, Sinh, Cosh, Tanh, Sqrt, Abs,
  Add, Sub, Mul, Div, Pow,
};

struct ExprNode;

/// Immutable expression tree. Copies share nodes.
class ExprAst {
public:
  ExprAst() = default;

  static ExprAst constant(double value);
  static ExprAst variable();
  static ExprAst unary(ExprOp op, ExprAst arg);
  static ExprAst binary(ExprOp op, ExprAst lhs, ExprAst rhs);

  bool empty() const noexcept { return !node_; }
  ExprOp op() const;
  double value() const;
  const ExprAst& lhs() const;
  const ExprAst& rhs() const;

private:
  explicit ExprAst(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  ExprOp op;
  double value = 0.0;
  ExprAst lhs;
  ExprAst rhs;
};

inline ExprAst ExprAst::constant(double value) {
  return ExprAst(std::make_shared<const ExprNode>(ExprNode{ExprOp::Const, value, {}, {}}));
}
inline ExprAst ExprAst::variable() {
  return ExprAst(std::make_shared<const ExprNode>(ExprNode{ExprOp::Var, 0.0, {}, {}}));
}
inline ExprAst ExprAst::unary(ExprOp op, ExprAst arg) {
  return ExprAst(std::make_shared<const ExprNode>(ExprNode{op, 0.0, std::move(arg), {}}));
}
inline ExprAst ExprAst::binary(ExprOp op, ExprAst lhs, ExprAst rhs) {
  return ExprAst(
      std::make_shared<const ExprNode>(ExprNode{op, 0.0, std::move(lhs), std::move(rhs)}));
}
inline ExprOp ExprAst::op() const { return node_->op; }
inline double ExprAst::value() const { return node_->value; }
inline const ExprAst& ExprAst::lhs() const { return node_->lhs; }
inline const ExprAst& ExprAst::rhs() const { return node_->rhs; }

inline bool is_unary(ExprOp op) { return op >= ExprOp::Neg && op <= ExprOp::Abs; }
inline bool is_binary(ExprOp op) { return op >= ExprOp::Add; }

namespace detail {

struct FunctionName {
  std::string_view name;
  ExprOp op;
};

inline constexpr FunctionName kFunctions[] = {
    {"sin", ExprOp::Sin},   {"cos", ExprOp::Cos},   {"exp", ExprOp::Exp},
    {"ln", ExprOp::Ln},     {"sinh", ExprOp::Sinh}, {"cosh", ExprOp::Cosh},
    {"tanh", ExprOp::Tanh}, {"sqrt", ExprOp::Sqrt}, {"abs", ExprOp::Abs},
};

inline std::string_view function_name(ExprOp op) {
  for (const auto& f : kFunctions)
    if (f.op == op) return f.name;
  return "?";
}

inline char binary_symbol(ExprOp op) {
  switch (op) {
    case ExprOp::Add: return '+';
    case ExprOp::Sub: return '-';
    case ExprOp::Mul: return '*';
    case ExprOp::Div: return '/';
    case ExprOp::Pow: return '^';
    default: return '?';
  }
}

inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprAst parse() {
    skip_ws();
    if (pos_ == src_.size()) fail("empty expression", {"expression"});
    ExprAst e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected input", {"operator", "end of input"});
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::string msg = what + " at offset " + std::to_string(pos_) + "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    throw SyntaxError(msg, pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                  src_[pos_] == '\n' || src_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      if (accept('+')) lhs = ExprAst::binary(ExprOp::Add, lhs, term());
      else if (accept('-')) lhs = ExprAst::binary(ExprOp::Sub, lhs, term());
      else return lhs;
    }
  }

  ExprAst term() {
    ExprAst lhs = unary();
    for (;;) {
      if (accept('*')) lhs = ExprAst::binary(ExprOp::Mul, lhs, unary());
      else if (accept('/')) lhs = ExprAst::binary(ExprOp::Div, lhs, unary());
      else return lhs;
    }
  }

  ExprAst unary() {
    if (accept('-')) return ExprAst::unary(ExprOp::Neg, unary());
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    if (accept('^')) return ExprAst::binary(ExprOp::Pow, base, unary());
    return base;
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

  ExprAst primary() {
    skip_ws();
    if (pos_ == src_.size()) fail("unexpected end of input", {"number", "u", "function", "("});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ExprAst e = expr();
      if (!accept(')')) fail("unbalanced parenthesis", {")"});
      return e;
    }
    if ((c >= '0' && c <= '9') || c == '.') return number();
    if (ident_start(c)) return identifier();
    fail(std::string("unexpected character '") + c + "'", {"number", "u", "function", "("});
  }

  ExprAst number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ((src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '.'))
      ++pos_;
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && src_[p] >= '0' && src_[p] <= '9') {
        while (p < src_.size() && src_[p] >= '0' && src_[p] <= '9') ++p;
        pos_ = p;
      }
    }
    double value = 0.0;
    const auto* first = src_.data() + start;
    const auto* last = src_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      pos_ = start;
      fail("malformed number", {"number"});
    }
    return ExprAst::constant(value);
  }

  ExprAst identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    skip_ws();
    const bool call = pos_ < src_.size() && src_[pos_] == '(';
    if (!call) {
      if (name == "u") return ExprAst::variable();
      if (name == "pi") return ExprAst::constant(std::numbers::pi);
      if (name == "e") return ExprAst::constant(std::numbers::e);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'",
           {"number", "u", "pi", "e", "function", "("});
    }
    for (const auto& f : kFunctions) {
      if (f.name == name) {
        ++pos_;
        ExprAst arg = expr();
        if (!accept(')')) fail("unbalanced parenthesis", {")"});
        return ExprAst::unary(f.op, arg);
      }
    }
    throw UnknownFunction(std::string(name), start);
  }
};

}  // namespace detail

inline ExprAst parse(std::string_view src) { return detail::Parser(src).parse(); }

/// Fully parenthesized text that parses back to an equivalent tree.
inline std::string to_string(const ExprAst& e) {
  switch (e.op()) {
    case ExprOp::Const:
      return e.value() < 0.0 ? "(" + detail::format_number(e.value()) + ")"
                             : detail::format_number(e.value());
    case ExprOp::Var: return "u";
    case ExprOp::Neg: return "(-" + to_string(e.lhs()) + ")";
    default: break;
  }
  if (is_unary(e.op()))
    return std::string(detail::function_name(e.op())) + "(" + to_string(e.lhs()) + ")";
  return "(" + to_string(e.lhs()) + " " + detail::binary_symbol(e.op()) + " " +
         to_string(e.rhs()) + ")";
}

inline bool has_variable(const ExprAst& e) {
  if (e.op() == ExprOp::Var) return true;
  if (e.op() == ExprOp::Const) return false;
  if (is_unary(e.op())) return has_variable(e.lhs());
  return has_variable(e.lhs()) || has_variable(e.rhs());
}

inline bool structurally_equal(const ExprAst& a, const ExprAst& b) {
  if (a.op() != b.op()) return false;
  if (a.op() == ExprOp::Const) return a.value() == b.value();
  if (a.op() == ExprOp::Var) return true;
  if (is_unary(a.op())) return structurally_equal(a.lhs(), b.lhs());
  return structurally_equal(a.lhs(), b.lhs()) && structurally_equal(a.rhs(), b.rhs());
}

namespace detail {

[[noreturn]] inline void domain_fail(const ExprAst& node, const std::string& what, double x) {
  throw DomainError(what + " (value " + format_number(x) + ") in " + to_string(node));
}

inline Jet2 checked(const ExprAst& node, const Jet2& r, double arg) {
  if (!r.finite()) domain_fail(node, "non-finite result", arg);
  return r;
}

inline Jet2 eval(const ExprAst& e, const Jet2& u) {
  switch (e.op()) {
    case ExprOp::Const: return Jet2::constant(e.value());
    case ExprOp::Var: return u;
    default: break;
  }
  if (is_unary(e.op())) {
    const Jet2 a = eval(e.lhs(), u);
    switch (e.op()) {
      case ExprOp::Neg: return -a;
      case ExprOp::Sin: return checked(e, sin(a), a.value);
      case ExprOp::Cos: return checked(e, cos(a), a.value);
      case ExprOp::Exp: return checked(e, exp(a), a.value);
      case ExprOp::Ln:
        if (!(a.value > 0.0)) domain_fail(e, "ln of non-positive argument", a.value);
        return checked(e, log(a), a.value);
      case ExprOp::Sinh: return checked(e, sinh(a), a.value);
      case ExprOp::Cosh: return checked(e, cosh(a), a.value);
      case ExprOp::Tanh: return checked(e, tanh(a), a.value);
      case ExprOp::Sqrt:
        if (a.value < 0.0) domain_fail(e, "sqrt of negative argument", a.value);
        return checked(e, sqrt(a), a.value);
      case ExprOp::Abs: return abs(a);
      default: break;
    }
  }
  const Jet2 a = eval(e.lhs(), u);
  switch (e.op()) {
    case ExprOp::Add: return a + eval(e.rhs(), u);
    case ExprOp::Sub: return a - eval(e.rhs(), u);
    case ExprOp::Mul: return a * eval(e.rhs(), u);
    case ExprOp::Div: {
      const Jet2 b = eval(e.rhs(), u);
      if (b.value == 0.0) domain_fail(e, "division by zero", b.value);
      return checked(e, a / b, b.value);
    }
    case ExprOp::Pow: {
      const Jet2 b = eval(e.rhs(), u);
      if (!has_variable(e.rhs())) {
        if (a.value < 0.0 && b.value != std::trunc(b.value))
          domain_fail(e, "negative base with non-integer exponent", a.value);
        return checked(e, pow(a, b.value), a.value);
      }
      if (!(a.value > 0.0)) domain_fail(e, "variable exponent needs a positive base", a.value);
      return checked(e, exp(b * log(a)), a.value);
    }
    default: break;
  }
  domain_fail(e, "malformed node", u.value);
}

}  // namespace detail

/// f(u), f'(u), f''(u) by dual-number propagation.
inline Jet2 eval_jet2(const ExprAst& ast, double u) {
  return detail::eval(ast, Jet2::variable(u));
}

/// Evaluates `ast` at a jet argument, composing derivatives by the chain rule.
inline Jet2 eval_jet2(const ExprAst& ast, const Jet2& u) { return detail::eval(ast, u); }

inline double evaluate(const ExprAst& ast, double u) { return eval_jet2(ast, u).value; }

}  // namespace pisurf
