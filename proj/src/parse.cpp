#include "nullag/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace nullag {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const VarSet& allowed) : src_(src), allowed_(allowed) {}

  Expr run() {
    Expr e = expression();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view src_;
  VarSet allowed_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expression() {
    Expr e = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        e = e + term();
      } else if (c == '-') {
        ++pos_;
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        e = e * factor();
      } else if (c == '/') {
        ++pos_;
        e = e / factor();
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    Expr base = atom();
    if (peek() == '^') {
      ++pos_;
      return pow(base, rational_exponent());
    }
    return base;
  }

  Expr atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '-') {
      ++pos_;
      Expr inner = atom();
      // fold unary minus on a bare literal into a negative constant
      if (inner.kind() == NodeKind::constant) return Expr::constant(-inner.constant_value());
      return -inner;
    }
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character");
  }

  Expr number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belonged to something else; not part of this literal
      }
    }
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '.')) fail("malformed number");
    double value = 0.0;
    auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc()) fail("malformed number");
    return Expr::constant(value);
  }

  Expr identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(src_.substr(start, pos_ - start));

    if (name == "ln" || name == "exp" || name == "sin" || name == "cos" || name == "abs") {
      expect('(');
      Expr arg = expression();
      expect(')');
      if (name == "ln") return ln(arg);
      if (name == "exp") return exp(arg);
      if (name == "sin") return sin(arg);
      if (name == "cos") return cos(arg);
      return abs(arg);
    }

    Var v;
    if (name == "t") v = Var::t;
    else if (name == "x") v = Var::x;
    else if (name == "xdot") v = Var::xdot;
    else if (name == "xddot") v = Var::xddot;
    else fail("unknown identifier '" + name + "'");

    if (!allowed_.contains(v)) {
      throw ForbiddenVariableError(start, name,
                                   "forbidden variable '" + name + "' at position " +
                                       std::to_string(start));
    }
    return Expr::variable(v);
  }

  // rational after '^': INT | -INT | DEC | (INT/INT) with optional sign
  Rational rational_exponent() {
    bool parens = consume('(');
    bool negative = consume('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected exponent");
    long long whole = 0;
    std::from_chars(src_.data() + start, src_.data() + pos_, whole);

    long long num = whole, den = 1;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      std::size_t fstart = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == fstart) fail("malformed exponent");
      if (pos_ - fstart > 15) fail("exponent has too many decimal digits");
      long long frac = 0;
      std::from_chars(src_.data() + fstart, src_.data() + pos_, frac);
      for (std::size_t i = 0; i < pos_ - fstart; ++i) den *= 10;
      num = whole * den + frac;
    } else if (parens && peek() == '/') {
      ++pos_;
      skip_space();
      std::size_t dstart = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected exponent denominator");
      std::from_chars(src_.data() + dstart, src_.data() + pos_, den);
      if (den == 0) fail("zero exponent denominator");
    }
    if (parens) expect(')');
    return Rational::of(negative ? -num : num, den);
  }
};

}  // namespace

Expr parse_expr(std::string_view source, const VarSet& allowed) {
  return Parser(source, allowed).run();
}

}  // namespace nullag
