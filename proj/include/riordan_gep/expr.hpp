#pragma once

// Series expressions: a recursive-descent parser, a pretty printer and an
// evaluator to truncated series.
//
//   expr    := term (('+' | '-') term)*
//   term    := power (('*' | '/') power)*
//   power   := unary ('^' power)?          exponent must fold to a rational
//   unary   := '-' unary | primary
//   primary := number | 'x' | '(' expr ')' | func '(' expr ')' | 'compose' '(' expr ',' expr ')'
//   func    := exp | log | inv | rev | sqrt

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riordan_gep/error.hpp"
#include "riordan_gep/rational.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

enum class ExprKind { RationalLit, Var, Add, Sub, Neg, Mul, Div, PowRational, Exp, Log, Inv, Rev, Compose, Sqrt };

inline const char* to_string(ExprKind k) {
  switch (k) {
    case ExprKind::RationalLit: return "RationalLit";
    case ExprKind::Var: return "Var";
    case ExprKind::Add: return "Add";
    case ExprKind::Sub: return "Sub";
    case ExprKind::Neg: return "Neg";
    case ExprKind::Mul: return "Mul";
    case ExprKind::Div: return "Div";
    case ExprKind::PowRational: return "PowRational";
    case ExprKind::Exp: return "Exp";
    case ExprKind::Log: return "Log";
    case ExprKind::Inv: return "Inv";
    case ExprKind::Rev: return "Rev";
    case ExprKind::Compose: return "Compose";
    case ExprKind::Sqrt: return "Sqrt";
  }
  return "?";
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// AST node. `value` holds the literal for RationalLit and the exponent for PowRational.
struct Expr {
  ExprKind kind;
  Rational value;
  std::vector<ExprPtr> args;
  Span span;

  static ExprPtr make(ExprKind kind, std::vector<ExprPtr> args, Span span, Rational value = 0) {
    return std::make_shared<const Expr>(Expr{kind, std::move(value), std::move(args), span});
  }
  static ExprPtr lit(const Rational& v, Span span = {}) { return make(ExprKind::RationalLit, {}, span, v); }
  static ExprPtr var(Span span = {}) { return make(ExprKind::Var, {}, span); }
};

/// Structural equality; spans are ignored.
inline bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!equal(*a.args[i], *b.args[i])) return false;
  return true;
}

inline bool operator==(const Expr& a, const Expr& b) { return equal(a, b); }

/// Debug form such as Div(Add(1,x),Sub(1,x)).
inline std::string to_sexpr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::RationalLit: return to_string(e.value);
    case ExprKind::Var: return "x";
    default: break;
  }
  std::string out = to_string(e.kind);
  out += "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + to_sexpr(*e.args[i]);
  if (e.kind == ExprKind::PowRational) out += "," + to_string(e.value);
  return out + ")";
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ < s_.size()) error({"operator", "end of input"});
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error({std::string("'") + c + "'"});
  }

  std::string found() const {
    if (pos_ >= s_.size()) return "end of input";
    return std::string("'") + s_[pos_] + "'";
  }
  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), found());
  }

  ExprPtr expr() {
    skip_ws();
    const std::size_t start = pos_;
    ExprPtr lhs = term();
    for (;;) {
      ExprKind k;
      if (accept('+')) k = ExprKind::Add;
      else if (accept('-')) k = ExprKind::Sub;
      else return lhs;
      ExprPtr rhs = term();
      lhs = Expr::make(k, {lhs, rhs}, {start, pos_});
    }
  }

  ExprPtr term() {
    skip_ws();
    const std::size_t start = pos_;
    ExprPtr lhs = power();
    for (;;) {
      ExprKind k;
      if (accept('*')) k = ExprKind::Mul;
      else if (accept('/')) k = ExprKind::Div;
      else return lhs;
      ExprPtr rhs = power();
      // "3/4" is a rational literal
      if (k == ExprKind::Div && lhs->kind == ExprKind::RationalLit && rhs->kind == ExprKind::RationalLit) {
        if (rhs->value == 0) throw ParseError(rhs->span.begin, {"nonzero denominator"}, "0");
        lhs = Expr::lit(lhs->value / rhs->value, {start, pos_});
        continue;
      }
      lhs = Expr::make(k, {lhs, rhs}, {start, pos_});
    }
  }

  ExprPtr power() {
    skip_ws();
    const std::size_t start = pos_;
    ExprPtr base = unary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t exp_at = pos_;
    ExprPtr exponent = power();
    const std::optional<Rational> e = fold(*exponent);
    if (!e) throw ParseError(exp_at, {"rational exponent"}, "non-constant expression");
    return Expr::make(ExprKind::PowRational, {base}, {start, pos_}, *e);
  }

  ExprPtr unary() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('-')) {
      ExprPtr inner = unary();
      return Expr::make(ExprKind::Neg, {inner}, {start, pos_});
    }
    return primary();
  }

  ExprPtr primary() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr::lit(Rational(std::string(s_.substr(start, pos_ - start))), {start, pos_});
    }
    if (accept('(')) {
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "x") return Expr::var({start, pos_});
      ExprKind k;
      if (name == "exp") k = ExprKind::Exp;
      else if (name == "log") k = ExprKind::Log;
      else if (name == "inv") k = ExprKind::Inv;
      else if (name == "rev") k = ExprKind::Rev;
      else if (name == "sqrt") k = ExprKind::Sqrt;
      else if (name == "compose") k = ExprKind::Compose;
      else {
        pos_ = start;
        throw ParseError(start, {"x", "exp", "log", "inv", "rev", "sqrt", "compose"},
                         "identifier '" + std::string(name) + "'");
      }
      expect('(');
      std::vector<ExprPtr> args{expr()};
      if (k == ExprKind::Compose) {
        expect(',');
        args.push_back(expr());
      }
      expect(')');
      return Expr::make(k, std::move(args), {start, pos_});
    }
    error({"number", "x", "'('", "'-'", "function"});
  }

  /// Value of a constant subexpression, if it has one.
  static std::optional<Rational> fold(const Expr& e) {
    auto arg = [&](std::size_t i) { return fold(*e.args[i]); };
    switch (e.kind) {
      case ExprKind::RationalLit: return e.value;
      case ExprKind::Neg: {
        auto a = arg(0);
        return a ? std::optional<Rational>(-*a) : std::nullopt;
      }
      case ExprKind::Add:
      case ExprKind::Sub:
      case ExprKind::Mul:
      case ExprKind::Div: {
        auto a = arg(0), b = arg(1);
        if (!a || !b) return std::nullopt;
        if (e.kind == ExprKind::Add) return *a + *b;
        if (e.kind == ExprKind::Sub) return *a - *b;
        if (e.kind == ExprKind::Mul) return *a * *b;
        if (*b == 0) return std::nullopt;
        return *a / *b;
      }
      case ExprKind::PowRational: {
        auto a = arg(0);
        if (!a || !is_integer(e.value) || (*a == 0 && e.value < 0)) return std::nullopt;
        return rgep::pow(*a, to_long(e.value));
      }
      default: return std::nullopt;
    }
  }
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::PowRational: return 3;
    case ExprKind::Neg: return 4;
    case ExprKind::RationalLit: return is_integer(e.value) && e.value >= 0 ? 5 : 0;
    default: return 5;
  }
}

inline std::string pretty(const Expr& e, int min_prec) {
  std::string out;
  auto sub = [](const ExprPtr& p, int prec) { return pretty(*p, prec); };
  switch (e.kind) {
    case ExprKind::RationalLit: out = to_string(e.value); break;
    case ExprKind::Var: out = "x"; break;
    case ExprKind::Add: out = sub(e.args[0], 1) + "+" + sub(e.args[1], 2); break;
    case ExprKind::Sub: out = sub(e.args[0], 1) + "-" + sub(e.args[1], 2); break;
    case ExprKind::Mul: out = sub(e.args[0], 2) + "*" + sub(e.args[1], 3); break;
    case ExprKind::Div: out = sub(e.args[0], 2) + "/" + sub(e.args[1], 3); break;
    case ExprKind::Neg: out = "-" + sub(e.args[0], 4); break;
    case ExprKind::PowRational: {
      const bool plain = is_integer(e.value) && e.value >= 0;
      out = sub(e.args[0], 4) + "^" + (plain ? to_string(e.value) : "(" + to_string(e.value) + ")");
      break;
    }
    case ExprKind::Compose: out = "compose(" + sub(e.args[0], 0) + "," + sub(e.args[1], 0) + ")"; break;
    default: {
      std::string name = to_string(e.kind);
      name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      out = name + "(" + sub(e.args[0], 0) + ")";
    }
  }
  return precedence(e) < min_prec ? "(" + out + ")" : out;
}

}  // namespace detail

/// Text that parses back to an equal AST.
inline std::string to_string(const Expr& e) { return detail::pretty(e, 1); }

namespace detail {

inline int valuation(const Series& s) {
  for (int k = 0; k <= s.order(); ++k)
    if (s[k] != 0) return k;
  return -1;
}

inline Series eval_node(const Expr& e, int order);

inline Series eval_checked(const Expr& e, int order) {
  try {
    return eval_node(e, order);
  } catch (const DomainError&) {
    throw;
  } catch (const Error& err) {
    throw DomainError(e.span, err.what());
  }
}

[[noreturn]] inline void domain(const Expr& e, const std::string& reason) { throw DomainError(e.span, reason); }

inline Series eval_pow(const Expr& e, const Series& a) {
  const Rational& phi = e.value;
  if (is_integer(phi)) {
    if (phi < 0 && a[0] == 0) domain(e, "negative power of a series with zero constant term");
    return series_pow(a, phi);
  }
  if (a[0] == 0) domain(e, "fractional power of a series with zero constant term");
  if (a[0] == 1) return series_pow(a, phi);
  const std::optional<Rational> c = exact_pow(a[0], phi);
  if (!c) domain(e, "constant term " + to_string(a[0]) + " has no rational power " + to_string(phi));
  return *c * series_pow((Rational(1) / a[0]) * a, phi);
}

inline Series eval_node(const Expr& e, int order) {
  auto arg = [&](std::size_t i, int ord) { return eval_checked(*e.args[i], ord); };
  switch (e.kind) {
    case ExprKind::RationalLit: return Series::constant(e.value, order);
    case ExprKind::Var: return Series::x(order);
    case ExprKind::Add: return arg(0, order) + arg(1, order);
    case ExprKind::Sub: return arg(0, order) - arg(1, order);
    case ExprKind::Mul: return arg(0, order) * arg(1, order);
    case ExprKind::Neg: return -arg(0, order);
    case ExprKind::Div: {
      Series b = arg(1, order);
      const int k = valuation(b);
      if (k < 0) domain(*e.args[1], "division by a series that vanishes to the requested order");
      if (k == 0) return arg(0, order) * series_inv(b);
      // cancel a common power of x, working k orders higher
      Series a = arg(0, order + k);
      b = arg(1, order + k);
      for (int i = 0; i < k; ++i)
        if (a[i] != 0) domain(*e.args[1], "denominator vanishes to higher order than the numerator");
      return a.div_x(k) * series_inv(b.div_x(k));
    }
    case ExprKind::PowRational: return eval_pow(e, arg(0, order));
    case ExprKind::Sqrt: {
      const Expr half{ExprKind::PowRational, Rational(1, 2), e.args, e.span};
      return eval_pow(half, arg(0, order));
    }
    case ExprKind::Exp: {
      const Series a = arg(0, order);
      if (a[0] != 0) domain(e, "exp needs a zero constant term");
      return series_exp(a);
    }
    case ExprKind::Log: {
      const Series a = arg(0, order);
      if (a[0] != 1) domain(e, "log needs constant term 1, got " + to_string(a[0]));
      return series_log(a);
    }
    case ExprKind::Inv: {
      const Series a = arg(0, order);
      if (a[0] == 0) domain(e, "inv needs a nonzero constant term");
      return series_inv(a);
    }
    case ExprKind::Rev: {
      const Series g = arg(0, order);
      if (g[0] != 0 || (order >= 1 && g[1] == 0)) domain(e, "rev needs g_0 = 0 and g_1 != 0");
      return series_comp_inverse(g);
    }
    case ExprKind::Compose: {
      const Series g = arg(1, order);
      if (g[0] != 0) domain(*e.args[1], "inner series of compose needs a zero constant term");
      return series_compose(arg(0, order), g);
    }
  }
  domain(e, "unknown node");
}

}  // namespace detail

/// Truncated series of the expression; domain failures carry the offending span.
inline Series eval_expr(const Expr& e, int order) {
  if (order < 0) fail(ErrorKind::OutOfRange, "order must be >= 0");
  return detail::eval_checked(e, order);
}

inline Series eval_expr(std::string_view text, int order) { return eval_expr(*parse_expr(text), order); }

}  // namespace rgep
