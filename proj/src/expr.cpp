#include "nullag/expr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace nullag {

struct ExprNode {
  NodeKind kind;
  double value = 0.0;       // constant
  Var var = Var::t;         // variable
  Rational exponent{0, 1};  // pow
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

bool is_unary(NodeKind k) {
  switch (k) {
    case NodeKind::neg:
    case NodeKind::ln:
    case NodeKind::exp:
    case NodeKind::sin:
    case NodeKind::cos:
    case NodeKind::abs:
    case NodeKind::pow:
      return true;
    default:
      return false;
  }
}

bool is_binary(NodeKind k) {
  switch (k) {
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div:
      return true;
    default:
      return false;
  }
}

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::x: return "x";
    case Var::xdot: return "xdot";
    case Var::xddot: return "xddot";
  }
  return "?";
}

Rational Rational::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational exponent with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Rational{num, den};
}

Expr::Expr() {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::constant;
  n->value = 0.0;
  node_ = std::move(n);
}

Expr Expr::constant(double value) {
  Expr e;
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::constant;
  n->value = value == 0.0 ? 0.0 : value;  // normalize -0
  e.node_ = std::move(n);
  return e;
}

Expr Expr::variable(Var v) {
  Expr e;
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::variable;
  n->var = v;
  e.node_ = std::move(n);
  return e;
}

NodeKind Expr::kind() const { return node_->kind; }
double Expr::constant_value() const { return node_->value; }
Var Expr::var() const { return node_->var; }
Rational Expr::exponent() const { return node_->exponent; }
Expr Expr::lhs() const { return Expr(node_->lhs); }
Expr Expr::rhs() const { return Expr(node_->rhs); }

bool Expr::is_constant(double value) const {
  return node_->kind == NodeKind::constant && node_->value == value;
}

const ExprNode& node_of(const Expr& e) { return *e.node_; }

Expr make_node(NodeKind kind, const Expr& a, const Expr& b, Rational exponent) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->exponent = exponent;
  n->lhs = a.node_;
  if (is_binary(kind)) n->rhs = b.node_;
  Expr e;
  e.node_ = std::move(n);
  return e;
}

namespace {
Expr binary(NodeKind k, const Expr& a, const Expr& b) { return make_node(k, a, b, Rational{0, 1}); }
Expr unary(NodeKind k, const Expr& a) { return make_node(k, a, a, Rational{0, 1}); }
}  // namespace

Expr operator+(const Expr& a, const Expr& b) { return binary(NodeKind::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return binary(NodeKind::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return binary(NodeKind::mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return binary(NodeKind::div, a, b); }
Expr operator-(const Expr& a) { return unary(NodeKind::neg, a); }

Expr operator+(const Expr& a, double b) { return a + Expr::constant(b); }
Expr operator+(double a, const Expr& b) { return Expr::constant(a) + b; }
Expr operator-(const Expr& a, double b) { return a - Expr::constant(b); }
Expr operator-(double a, const Expr& b) { return Expr::constant(a) - b; }
Expr operator*(const Expr& a, double b) { return a * Expr::constant(b); }
Expr operator*(double a, const Expr& b) { return Expr::constant(a) * b; }
Expr operator/(const Expr& a, double b) { return a / Expr::constant(b); }
Expr operator/(double a, const Expr& b) { return Expr::constant(a) / b; }

Expr pow(const Expr& base, Rational exponent) {
  return make_node(NodeKind::pow, base, base, Rational::of(exponent.num, exponent.den));
}
Expr pow(const Expr& base, long long exponent) { return pow(base, Rational::of(exponent)); }
Expr ln(const Expr& arg) { return unary(NodeKind::ln, arg); }
Expr exp(const Expr& arg) { return unary(NodeKind::exp, arg); }
Expr sin(const Expr& arg) { return unary(NodeKind::sin, arg); }
Expr cos(const Expr& arg) { return unary(NodeKind::cos, arg); }
Expr abs(const Expr& arg) { return unary(NodeKind::abs, arg); }

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  const ExprNode& a = *node_;
  const ExprNode& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::constant:
      return a.value == b.value;
    case NodeKind::variable:
      return a.var == b.var;
    case NodeKind::pow:
      if (!(a.exponent == b.exponent)) return false;
      return Expr(a.lhs) == Expr(b.lhs);
    default:
      if (is_unary(a.kind)) return Expr(a.lhs) == Expr(b.lhs);
      return Expr(a.lhs) == Expr(b.lhs) && Expr(a.rhs) == Expr(b.rhs);
  }
}

int compare(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case NodeKind::constant: {
      double av = a.constant_value(), bv = b.constant_value();
      if (av < bv) return -1;
      if (av > bv) return 1;
      return 0;
    }
    case NodeKind::variable: {
      int av = static_cast<int>(a.var()), bv = static_cast<int>(b.var());
      return av < bv ? -1 : (av > bv ? 1 : 0);
    }
    case NodeKind::pow: {
      int c = compare(a.lhs(), b.lhs());
      if (c != 0) return c;
      Rational ar = a.exponent(), br = b.exponent();
      // compare as fractions: ar.num*br.den vs br.num*ar.den
      long long l = ar.num * br.den, r = br.num * ar.den;
      return l < r ? -1 : (l > r ? 1 : 0);
    }
    default:
      if (is_unary(a.kind())) return compare(a.lhs(), b.lhs());
      {
        int c = compare(a.lhs(), b.lhs());
        if (c != 0) return c;
        return compare(a.rhs(), b.rhs());
      }
  }
}

double coordinate(const EvalPoint& p, Var v) {
  switch (v) {
    case Var::t: return p.t;
    case Var::x: return p.x;
    case Var::xdot: return p.xdot;
    case Var::xddot: return p.xddot;
  }
  return 0.0;
}

namespace {

[[noreturn]] void throw_eval(EvalError::Kind kind, const Expr& offender) {
  std::string text = to_text(offender);
  const char* what = kind == EvalError::Kind::division_by_zero ? "division by zero in "
                     : kind == EvalError::Kind::log_of_zero    ? "log of zero in "
                                                               : "domain error in ";
  throw EvalError(kind, text, what + text);
}

double eval_pow(double base, Rational r, const Expr& self, double guard) {
  if (r.num < 0 && std::fabs(base) < guard) {
    throw_eval(EvalError::Kind::division_by_zero, self);
  }
  if (r.is_integer()) {
    return std::pow(base, static_cast<double>(r.num));
  }
  if (base > 0.0) {
    return std::pow(base, r.to_double());
  }
  if (base == 0.0) {
    return 0.0;  // 0^(positive rational)
  }
  // negative base: a real root exists only for odd denominators
  if (r.den % 2 == 1) {
    double mag = std::pow(-base, r.to_double());
    return (r.num % 2 == 0) ? mag : -mag;
  }
  throw_eval(EvalError::Kind::domain, self);
}

}  // namespace

double eval(const Expr& e, const EvalPoint& p, double guard) {
  const double tiny = std::numeric_limits<double>::min();
  const double g = std::max(guard, tiny);
  switch (e.kind()) {
    case NodeKind::constant: return e.constant_value();
    case NodeKind::variable: return coordinate(p, e.var());
    case NodeKind::add: return eval(e.lhs(), p, guard) + eval(e.rhs(), p, guard);
    case NodeKind::sub: return eval(e.lhs(), p, guard) - eval(e.rhs(), p, guard);
    case NodeKind::mul: return eval(e.lhs(), p, guard) * eval(e.rhs(), p, guard);
    case NodeKind::div: {
      double den = eval(e.rhs(), p, guard);
      if (std::fabs(den) < g) throw_eval(EvalError::Kind::division_by_zero, e);
      return eval(e.lhs(), p, guard) / den;
    }
    case NodeKind::pow: return eval_pow(eval(e.lhs(), p, guard), e.exponent(), e, g);
    case NodeKind::neg: return -eval(e.lhs(), p, guard);
    case NodeKind::ln: {
      double a = eval(e.lhs(), p, guard);
      if (std::fabs(a) < g) throw_eval(EvalError::Kind::log_of_zero, e);
      return std::log(std::fabs(a));
    }
    case NodeKind::exp: return std::exp(eval(e.lhs(), p, guard));
    case NodeKind::sin: return std::sin(eval(e.lhs(), p, guard));
    case NodeKind::cos: return std::cos(eval(e.lhs(), p, guard));
    case NodeKind::abs: return std::fabs(eval(e.lhs(), p, guard));
  }
  throw std::logic_error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// differentiation
// ---------------------------------------------------------------------------

namespace {

// Light-touch constructors used while differentiating; they keep derivative
// trees from drowning in 0*... and 1*... noise without doing a full simplify.
Expr s_add(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  if (a.kind() == NodeKind::constant && b.kind() == NodeKind::constant)
    return Expr::constant(a.constant_value() + b.constant_value());
  return a + b;
}

Expr s_sub(const Expr& a, const Expr& b) {
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  if (a.kind() == NodeKind::constant && b.kind() == NodeKind::constant)
    return Expr::constant(a.constant_value() - b.constant_value());
  return a - b;
}

Expr s_mul(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.kind() == NodeKind::constant && b.kind() == NodeKind::constant)
    return Expr::constant(a.constant_value() * b.constant_value());
  return a * b;
}

Expr s_div(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0)) return Expr::constant(0.0);
  if (b.is_constant(1.0)) return a;
  return a / b;
}

Expr s_neg(const Expr& a) {
  if (a.kind() == NodeKind::constant) return Expr::constant(-a.constant_value());
  if (a.kind() == NodeKind::neg) return a.lhs();
  return -a;
}

Expr s_pow(const Expr& base, Rational r) {
  if (r.num == 0) return Expr::constant(1.0);
  if (r.num == 1 && r.den == 1) return base;
  return pow(base, r);
}

}  // namespace

Expr partial_derivative(const Expr& e, Var v) {
  switch (e.kind()) {
    case NodeKind::constant:
      return Expr::constant(0.0);
    case NodeKind::variable:
      return Expr::constant(e.var() == v ? 1.0 : 0.0);
    case NodeKind::add:
      return s_add(partial_derivative(e.lhs(), v), partial_derivative(e.rhs(), v));
    case NodeKind::sub:
      return s_sub(partial_derivative(e.lhs(), v), partial_derivative(e.rhs(), v));
    case NodeKind::mul:
      return s_add(s_mul(partial_derivative(e.lhs(), v), e.rhs()),
                   s_mul(e.lhs(), partial_derivative(e.rhs(), v)));
    case NodeKind::div: {
      // (u'v - uv')/v^2
      Expr num = s_sub(s_mul(partial_derivative(e.lhs(), v), e.rhs()),
                       s_mul(e.lhs(), partial_derivative(e.rhs(), v)));
      return s_div(num, s_pow(e.rhs(), Rational::of(2)));
    }
    case NodeKind::pow: {
      Rational r = e.exponent();
      Expr inner = partial_derivative(e.lhs(), v);
      return s_mul(s_mul(Expr::constant(r.to_double()), s_pow(e.lhs(), r - 1)), inner);
    }
    case NodeKind::neg:
      return s_neg(partial_derivative(e.lhs(), v));
    case NodeKind::ln:
      // d ln|u| = u'/u
      return s_div(partial_derivative(e.lhs(), v), e.lhs());
    case NodeKind::exp:
      return s_mul(exp(e.lhs()), partial_derivative(e.lhs(), v));
    case NodeKind::sin:
      return s_mul(cos(e.lhs()), partial_derivative(e.lhs(), v));
    case NodeKind::cos:
      return s_neg(s_mul(sin(e.lhs()), partial_derivative(e.lhs(), v)));
    case NodeKind::abs:
      // d|u| = (u/|u|) u'
      return s_mul(s_div(e.lhs(), abs(e.lhs())), partial_derivative(e.lhs(), v));
  }
  throw std::logic_error("unreachable expression kind");
}

Expr total_time_derivative(const Expr& e) {
  if (contains(e, Var::xddot)) {
    throw std::invalid_argument("order overflow: total time derivative of an expression containing xddot");
  }
  Expr dt = partial_derivative(e, Var::t);
  Expr dx = partial_derivative(e, Var::x);
  Expr dxdot = partial_derivative(e, Var::xdot);
  return s_add(s_add(dt, s_mul(Expr::variable(Var::xdot), dx)),
               s_mul(Expr::variable(Var::xddot), dxdot));
}

Expr substitute(const Expr& e, Var v, const Expr& replacement) {
  switch (e.kind()) {
    case NodeKind::constant:
      return e;
    case NodeKind::variable:
      return e.var() == v ? replacement : e;
    case NodeKind::pow:
      return pow(substitute(e.lhs(), v, replacement), e.exponent());
    default:
      if (is_unary(e.kind()))
        return make_node(e.kind(), substitute(e.lhs(), v, replacement), Expr(), Rational{0, 1});
      return make_node(e.kind(), substitute(e.lhs(), v, replacement),
                       substitute(e.rhs(), v, replacement), Rational{0, 1});
  }
}

bool contains(const Expr& e, Var v) {
  switch (e.kind()) {
    case NodeKind::constant:
      return false;
    case NodeKind::variable:
      return e.var() == v;
    default:
      if (is_unary(e.kind()) || e.kind() == NodeKind::pow) return contains(e.lhs(), v);
      return contains(e.lhs(), v) || contains(e.rhs(), v);
  }
}

// ---------------------------------------------------------------------------
// simplify
// ---------------------------------------------------------------------------

namespace {

struct SignedTerm {
  int sign;  // +1 or -1
  Expr expr;
};

void collect_sum(const Expr& e, int sign, double& constant_acc, std::vector<SignedTerm>& terms) {
  switch (e.kind()) {
    case NodeKind::add:
      collect_sum(e.lhs(), sign, constant_acc, terms);
      collect_sum(e.rhs(), sign, constant_acc, terms);
      return;
    case NodeKind::sub:
      collect_sum(e.lhs(), sign, constant_acc, terms);
      collect_sum(e.rhs(), -sign, constant_acc, terms);
      return;
    case NodeKind::neg:
      collect_sum(e.lhs(), -sign, constant_acc, terms);
      return;
    case NodeKind::constant:
      constant_acc += sign * e.constant_value();
      return;
    default:
      terms.push_back({sign, e});
      return;
  }
}

void collect_product(const Expr& e, double& coefficient, std::vector<Expr>& factors) {
  switch (e.kind()) {
    case NodeKind::mul:
      collect_product(e.lhs(), coefficient, factors);
      collect_product(e.rhs(), coefficient, factors);
      return;
    case NodeKind::neg:
      coefficient = -coefficient;
      collect_product(e.lhs(), coefficient, factors);
      return;
    case NodeKind::constant:
      coefficient *= e.constant_value();
      return;
    default:
      factors.push_back(e);
      return;
  }
}

Expr rebuild_sum(double constant_acc, std::vector<SignedTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const SignedTerm& a, const SignedTerm& b) { return compare(a.expr, b.expr) < 0; });

  // cancel equal terms of opposite sign within each run of equal expressions
  std::vector<SignedTerm> kept;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    int net = 0;
    while (j < terms.size() && compare(terms[i].expr, terms[j].expr) == 0) {
      net += terms[j].sign;
      ++j;
    }
    for (int k = 0; k < std::abs(net); ++k) kept.push_back({net > 0 ? 1 : -1, terms[i].expr});
    i = j;
  }

  std::vector<SignedTerm> ordered;
  for (const auto& tm : kept)
    if (tm.sign > 0) ordered.push_back(tm);
  for (const auto& tm : kept)
    if (tm.sign < 0) ordered.push_back(tm);

  if (ordered.empty()) return Expr::constant(constant_acc);

  Expr out = ordered[0].sign > 0 ? ordered[0].expr : -ordered[0].expr;
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    out = ordered[i].sign > 0 ? out + ordered[i].expr : out - ordered[i].expr;
  }
  if (constant_acc != 0.0) {
    out = constant_acc > 0.0 ? out + Expr::constant(constant_acc)
                             : out - Expr::constant(-constant_acc);
  }
  return out;
}

Expr rebuild_product(double coefficient, std::vector<Expr>& factors) {
  if (coefficient == 0.0) return Expr::constant(0.0);
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
  if (factors.empty()) return Expr::constant(coefficient);

  double mag = std::fabs(coefficient);
  bool negative = coefficient < 0.0;
  std::size_t start = 0;
  Expr chain = mag != 1.0 ? Expr::constant(mag) : factors[start++];
  for (std::size_t i = start; i < factors.size(); ++i) chain = chain * factors[i];
  return negative ? -chain : chain;
}

Expr simp(const Expr& e);

Expr simp_children(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::constant:
    case NodeKind::variable:
      return e;
    case NodeKind::pow:
      return pow(simp(e.lhs()), e.exponent());
    default:
      if (is_unary(e.kind())) return make_node(e.kind(), simp(e.lhs()), Expr(), Rational{0, 1});
      return make_node(e.kind(), simp(e.lhs()), simp(e.rhs()), Rational{0, 1});
  }
}

bool all_children_constant(const Expr& e) {
  if (e.kind() == NodeKind::constant || e.kind() == NodeKind::variable) return false;
  if (is_unary(e.kind()) || e.kind() == NodeKind::pow)
    return e.lhs().kind() == NodeKind::constant;
  return e.lhs().kind() == NodeKind::constant && e.rhs().kind() == NodeKind::constant;
}

Expr simp(const Expr& e) {
  if (e.kind() == NodeKind::constant || e.kind() == NodeKind::variable) return e;
  Expr n = simp_children(e);

  if (all_children_constant(n)) {
    try {
      double v = eval(n, EvalPoint{});
      if (std::isfinite(v)) return Expr::constant(v);
    } catch (const EvalError&) {
      // keep structure; evaluation will report the problem with context
    }
  }

  switch (n.kind()) {
    case NodeKind::add:
    case NodeKind::sub: {
      double acc = 0.0;
      std::vector<SignedTerm> terms;
      collect_sum(n, 1, acc, terms);
      return rebuild_sum(acc, terms);
    }
    case NodeKind::mul: {
      double coefficient = 1.0;
      std::vector<Expr> factors;
      collect_product(n, coefficient, factors);
      return rebuild_product(coefficient, factors);
    }
    case NodeKind::neg: {
      Expr a = n.lhs();
      if (a.kind() == NodeKind::constant) return Expr::constant(-a.constant_value());
      if (a.kind() == NodeKind::neg) return a.lhs();
      return n;
    }
    case NodeKind::div: {
      Expr a = n.lhs(), b = n.rhs();
      bool negative = false;
      if (a.kind() == NodeKind::neg) {
        negative = !negative;
        a = a.lhs();
      }
      if (b.kind() == NodeKind::neg) {
        negative = !negative;
        b = b.lhs();
      }
      Expr out;
      if (a.is_constant(0.0)) out = Expr::constant(0.0);
      else if (b.is_constant(1.0)) out = a;
      else if (a == b) out = Expr::constant(1.0);
      else out = a / b;
      if (negative && !out.is_constant(0.0)) {
        out = out.kind() == NodeKind::constant ? Expr::constant(-out.constant_value()) : -out;
      }
      return out;
    }
    case NodeKind::pow: {
      Rational r = n.exponent();
      if (r.num == 0) return Expr::constant(1.0);
      if (r.num == 1 && r.den == 1) return n.lhs();
      return n;
    }
    case NodeKind::ln: {
      Expr a = n.lhs();
      if (a.kind() == NodeKind::abs) return ln(a.lhs());  // ln|.| convention
      if (a.kind() == NodeKind::exp) return a.lhs();
      return n;
    }
    case NodeKind::abs: {
      Expr a = n.lhs();
      if (a.kind() == NodeKind::neg) return abs(a.lhs());
      if (a.kind() == NodeKind::abs) return a;
      return n;
    }
    default:
      return n;
  }
}

}  // namespace

Expr simplify(const Expr& e) { return simp(e); }

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

namespace {

// precedence levels matching the grammar: sum < product < power < atom
constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecPower = 3;
constexpr int kPrecAtom = 4;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

int own_precedence(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::add:
    case NodeKind::sub:
      return kPrecSum;
    case NodeKind::mul:
    case NodeKind::div:
      return kPrecProduct;
    case NodeKind::pow:
      return kPrecPower;
    case NodeKind::neg:
      return kPrecSum;  // '-' atom binds like a sum operand for printing
    case NodeKind::constant:
      return e.constant_value() < 0.0 ? kPrecSum : kPrecAtom;
    default:
      return kPrecAtom;
  }
}

void print(const Expr& e, int min_prec, std::string& out) {
  bool needs_parens = own_precedence(e) < min_prec;
  if (needs_parens) out += '(';
  switch (e.kind()) {
    case NodeKind::constant:
      out += format_double(e.constant_value());
      break;
    case NodeKind::variable:
      out += var_name(e.var());
      break;
    case NodeKind::add:
      print(e.lhs(), kPrecSum, out);
      out += " + ";
      print(e.rhs(), kPrecSum + 1, out);
      break;
    case NodeKind::sub:
      print(e.lhs(), kPrecSum, out);
      out += " - ";
      print(e.rhs(), kPrecSum + 1, out);
      break;
    case NodeKind::mul:
      print(e.lhs(), kPrecProduct, out);
      out += '*';
      print(e.rhs(), kPrecProduct + 1, out);
      break;
    case NodeKind::div:
      print(e.lhs(), kPrecProduct, out);
      out += '/';
      print(e.rhs(), kPrecProduct + 1, out);
      break;
    case NodeKind::pow: {
      print(e.lhs(), kPrecAtom, out);
      out += '^';
      Rational r = e.exponent();
      if (r.is_integer()) {
        if (r.num < 0) {
          out += '(';
          out += std::to_string(r.num);
          out += ')';
        } else {
          out += std::to_string(r.num);
        }
      } else {
        out += '(';
        out += std::to_string(r.num);
        out += '/';
        out += std::to_string(r.den);
        out += ')';
      }
      break;
    }
    case NodeKind::neg:
      out += '-';
      print(e.lhs(), kPrecAtom, out);
      break;
    case NodeKind::ln:
    case NodeKind::exp:
    case NodeKind::sin:
    case NodeKind::cos:
    case NodeKind::abs: {
      const char* name = e.kind() == NodeKind::ln    ? "ln"
                         : e.kind() == NodeKind::exp ? "exp"
                         : e.kind() == NodeKind::sin ? "sin"
                         : e.kind() == NodeKind::cos ? "cos"
                                                     : "abs";
      out += name;
      out += '(';
      print(e.lhs(), kPrecSum, out);
      out += ')';
      break;
    }
  }
  if (needs_parens) out += ')';
}

}  // namespace

std::string to_text(const Expr& e) {
  std::string out;
  print(e, kPrecSum, out);
  return out;
}

// ---------------------------------------------------------------------------
// Trajectory
// ---------------------------------------------------------------------------

Trajectory::Trajectory(Expr x_of_t) : x_of_t_(std::move(x_of_t)) {
  if (contains(x_of_t_, Var::x) || contains(x_of_t_, Var::xdot) || contains(x_of_t_, Var::xddot)) {
    throw std::invalid_argument("trajectory must be an expression in t only");
  }
  xdot_of_t_ = simplify(partial_derivative(x_of_t_, Var::t));
  xddot_of_t_ = simplify(partial_derivative(xdot_of_t_, Var::t));
}

double Trajectory::position(double t) const { return eval(x_of_t_, EvalPoint{t, 0, 0, 0}); }
double Trajectory::velocity(double t) const { return eval(xdot_of_t_, EvalPoint{t, 0, 0, 0}); }
double Trajectory::acceleration(double t) const { return eval(xddot_of_t_, EvalPoint{t, 0, 0, 0}); }

EvalPoint Trajectory::at(double t) const {
  return EvalPoint{t, position(t), velocity(t), acceleration(t)};
}

}  // namespace nullag
