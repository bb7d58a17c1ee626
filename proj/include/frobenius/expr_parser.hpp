#ifndef FROBENIUS_EXPR_PARSER_HPP
#define FROBENIUS_EXPR_PARSER_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "multiseries.hpp"

namespace frob {

enum class ExprKind { number, imag_unit, var_x, var_y, param, add, sub, mul, div, neg, pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree node. `value` is used by number, `name` by param,
/// `exponent` by pow; `lhs`/`rhs` by the operators (neg and pow use lhs only).
struct Expr {
  ExprKind kind = ExprKind::number;
  double value = 0.0;
  std::string name;
  unsigned exponent = 0;
  ExprPtr lhs;
  ExprPtr rhs;
};

using ParamTable = std::map<std::string, Complex, std::less<>>;

namespace detail {

inline ExprPtr make_leaf(ExprKind k, double v = 0.0, std::string name = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->value = v;
  e->name = std::move(name);
  return e;
}

inline ExprPtr make_node(ExprKind k, ExprPtr l, ExprPtr r = nullptr, unsigned exponent = 0) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->exponent = exponent;
  return e;
}

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind = Tok::end;
  std::size_t offset = 0;
  std::string_view text;
  double value = 0.0;
};

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  ExprPtr parse() {
    if (cur_.kind == Tok::end) fail("empty expression", {"number", "identifier", "(", "-"});
    auto e = expr();
    if (cur_.kind != Tok::end) fail("unexpected token", {"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    int line = 1, col = 1;
    for (std::size_t k = 0; k < cur_.offset && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(what, cur_.offset, line, col, std::move(expected));
  }

  void advance() {
    prev_ = cur_.kind;
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_ = Token{};
    cur_.offset = pos_;
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      cur_.kind = k;
      cur_.text = src_.substr(pos_, 1);
      ++pos_;
    };
    switch (c) {
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '*': return single(Tok::star);
      case '/': return single(Tok::slash);
      case '^': return single(Tok::caret);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = pos_;
      bool digits = false;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end, digits = true;
      if (end < src_.size() && src_[end] == '.') {
        ++end;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end, digits = true;
      }
      if (!digits) fail("malformed number", {"digit"});
      // Exponent part only when followed by digits, so "2e" never swallows an identifier.
      if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
        std::size_t k = end + 1;
        if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
        if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
          while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
          end = k;
        }
      }
      cur_.kind = Tok::number;
      cur_.text = src_.substr(pos_, end - pos_);
      const std::string buf(cur_.text);
      cur_.value = std::strtod(buf.c_str(), nullptr);
      if (!std::isfinite(cur_.value)) fail("numeric literal out of range", {"finite number"});
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      cur_.kind = Tok::ident;
      cur_.text = src_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", {"number", "identifier", "operator", "(", ")"});
  }

  bool implicit_product_follows() const {
    return (prev_ == Tok::number || prev_ == Tok::rparen) &&
           (cur_.kind == Tok::ident || cur_.kind == Tok::lparen);
  }

  ExprPtr expr() {
    auto lhs = term();
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const auto k = cur_.kind == Tok::plus ? ExprKind::add : ExprKind::sub;
      advance();
      lhs = make_node(k, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    auto lhs = unary();
    for (;;) {
      if (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
        const auto k = cur_.kind == Tok::star ? ExprKind::mul : ExprKind::div;
        advance();
        lhs = make_node(k, lhs, unary());
      } else if (implicit_product_follows()) {
        lhs = make_node(ExprKind::mul, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (cur_.kind == Tok::minus) {
      advance();
      return make_node(ExprKind::neg, unary());
    }
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (cur_.kind != Tok::caret) return base;
    advance();
    return make_node(ExprKind::pow, base, nullptr, exponent());
  }

  // Right-associative chain of integer literals, folded: x^2^3 is x^8.
  unsigned exponent() {
    if (cur_.kind != Tok::number || cur_.text.find_first_not_of("0123456789") != std::string_view::npos)
      fail("exponent must be a nonnegative integer literal", {"integer"});
    unsigned base = 0;
    auto [p, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), base);
    if (ec != std::errc{} || base > kMaxExponent) fail("exponent too large", {"integer <= 4096"});
    advance();
    if (cur_.kind != Tok::caret) return base;
    advance();
    const unsigned e = exponent();
    double folded = std::pow(static_cast<double>(base), static_cast<double>(e));
    if (folded > kMaxExponent) fail("exponent too large", {"integer <= 4096"});
    return static_cast<unsigned>(folded);
  }

  ExprPtr primary() {
    switch (cur_.kind) {
      case Tok::number: {
        auto e = make_leaf(ExprKind::number, cur_.value);
        advance();
        return e;
      }
      case Tok::ident: {
        ExprPtr e;
        if (cur_.text == "x") e = make_leaf(ExprKind::var_x);
        else if (cur_.text == "y") e = make_leaf(ExprKind::var_y);
        else if (cur_.text == "i") e = make_leaf(ExprKind::imag_unit);
        else e = make_leaf(ExprKind::param, 0.0, std::string(cur_.text));
        advance();
        return e;
      }
      case Tok::lparen: {
        advance();
        auto e = expr();
        if (cur_.kind != Tok::rparen) fail("unbalanced parenthesis", {")", "+", "-", "*", "/", "^"});
        advance();
        return e;
      }
      default:
        fail(cur_.kind == Tok::end ? "unexpected end of input" : "unexpected token",
             {"number", "identifier", "(", "-"});
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
  Tok prev_ = Tok::end;
};

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Grammar, loosest binding first:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary | unary)*   (juxtaposition only after a literal or ')')
///   unary   := '-' unary | power
///   power   := primary ('^' integer ('^' integer)*)?
///   primary := number | 'x' | 'y' | 'i' | identifier | '(' expr ')'
inline ExprPtr parse_expr(std::string_view text) { return detail::Parser(text).parse(); }

/// Fully parenthesized rendering that parses back to the same tree.
inline std::string pretty_print(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + pretty_print(*e.lhs) + " " + op + " " + pretty_print(*e.rhs) + ")"; };
  switch (e.kind) {
    case ExprKind::number: return detail::format_number(e.value);
    case ExprKind::imag_unit: return "i";
    case ExprKind::var_x: return "x";
    case ExprKind::var_y: return "y";
    case ExprKind::param: return e.name;
    case ExprKind::add: return bin("+");
    case ExprKind::sub: return bin("-");
    case ExprKind::mul: return bin("*");
    case ExprKind::div: return bin("/");
    case ExprKind::neg: return "(-" + pretty_print(*e.lhs) + ")";
    case ExprKind::pow: return "(" + pretty_print(*e.lhs) + "^" + std::to_string(e.exponent) + ")";
  }
  return {};
}

inline bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.exponent != b.exponent || a.name != b.name) return false;
  if (a.kind == ExprKind::number && a.value != b.value) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
  return true;
}

inline void collect_parameters(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::param) out.insert(e.name);
  if (e.lhs) collect_parameters(*e.lhs, out);
  if (e.rhs) collect_parameters(*e.rhs, out);
}

inline CSeries2 to_series(const Expr& e, const ParamTable& params, int order) {
  switch (e.kind) {
    case ExprKind::number: return CSeries2::constant(e.value, order);
    case ExprKind::imag_unit: return CSeries2::constant(Complex{0.0, 1.0}, order);
    case ExprKind::var_x: return CSeries2::monomial(1, 0, 1.0, order);
    case ExprKind::var_y: return CSeries2::monomial(0, 1, 1.0, order);
    case ExprKind::param: {
      auto it = params.find(e.name);
      if (it == params.end()) throw Error(ErrorKind::UnboundParameter, "parameter '" + e.name + "' is not bound");
      return CSeries2::constant(it->second, order);
    }
    case ExprKind::add: return to_series(*e.lhs, params, order) + to_series(*e.rhs, params, order);
    case ExprKind::sub: return to_series(*e.lhs, params, order) - to_series(*e.rhs, params, order);
    case ExprKind::mul: return cauchy_mul(to_series(*e.lhs, params, order), to_series(*e.rhs, params, order));
    case ExprKind::div: {
      const auto den = to_series(*e.rhs, params, order);
      if (std::abs(den.constant_term()) == 0.0)
        throw Error(ErrorKind::DivisionBySeriesWithZeroConstantTerm,
                    "divisor '" + pretty_print(*e.rhs) + "' vanishes at the origin");
      return cauchy_mul(to_series(*e.lhs, params, order), reciprocal(den));
    }
    case ExprKind::neg: return -to_series(*e.lhs, params, order);
    case ExprKind::pow: {
      auto base = to_series(*e.lhs, params, order);
      auto acc = CSeries2::constant(1.0, order);
      for (unsigned k = e.exponent; k > 0; k >>= 1) {
        if (k & 1u) acc = cauchy_mul(acc, base);
        if (k > 1) base = cauchy_mul(base, base);
      }
      return acc;
    }
  }
  return CSeries2(order);
}

inline CSeries2 parse_series(std::string_view text, const ParamTable& params, int order) {
  return to_series(*parse_expr(text), params, order);
}

}  // namespace frob

#endif  // FROBENIUS_EXPR_PARSER_HPP
