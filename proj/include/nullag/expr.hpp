#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "nullag/errors.hpp"

namespace nullag {

/// The four admissible variables. Coefficient functions are expressions over
/// t alone; Lagrangians live on (t, x, xdot); gauge functions on (t, x).
enum class Var : int { t = 0, x = 1, xdot = 2, xddot = 3 };

const char* var_name(Var v);

/// Exact rational exponent for Pow nodes (denominator > 0, reduced).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den = 1);
  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational operator-(long long rhs) const { return Rational::of(num - rhs * den, den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

enum class NodeKind {
  constant,
  variable,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  ln,  // ln|.| throughout
  exp,
  sin,
  cos,
  abs,
};

struct ExprNode;

/// Immutable expression tree over {t, x, xdot, xddot}. Value type with shared
/// structure underneath; structural equality via operator==.
class Expr {
 public:
  Expr();  // the constant 0

  static Expr constant(double value);
  static Expr variable(Var v);

  NodeKind kind() const;
  double constant_value() const;  // valid for constant nodes
  Var var() const;                // valid for variable nodes
  Rational exponent() const;      // valid for pow nodes
  Expr lhs() const;               // first child (unary: the only child)
  Expr rhs() const;               // second child

  bool is_constant(double value) const;
  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;

  friend Expr make_node(NodeKind kind, const Expr& a, const Expr& b, Rational exponent);
  friend const ExprNode& node_of(const Expr& e);
};

// Raw structural constructors; no rewriting happens here, so parse/print
// round-trips stay faithful. simplify() is the normalization entry point.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator+(const Expr& a, double b);
Expr operator+(double a, const Expr& b);
Expr operator-(const Expr& a, double b);
Expr operator-(double a, const Expr& b);
Expr operator*(const Expr& a, double b);
Expr operator*(double a, const Expr& b);
Expr operator/(const Expr& a, double b);
Expr operator/(double a, const Expr& b);

Expr pow(const Expr& base, Rational exponent);
Expr pow(const Expr& base, long long exponent);
Expr ln(const Expr& arg);
Expr exp(const Expr& arg);
Expr sin(const Expr& arg);
Expr cos(const Expr& arg);
Expr abs(const Expr& arg);

/// A point of the extended phase space (all coordinates finite).
struct EvalPoint {
  double t = 0.0;
  double x = 0.0;
  double xdot = 0.0;
  double xddot = 0.0;
};

double coordinate(const EvalPoint& p, Var v);

/// IEEE double evaluation. Ln evaluates as ln|arg|. Throws EvalError when a
/// denominator or log argument has magnitude below `guard` (or below the
/// smallest normal double when guard is 0).
double eval(const Expr& e, const EvalPoint& p, double guard = 0.0);

/// Exact symbolic partial derivative; t, x, xdot, xddot are independent.
Expr partial_derivative(const Expr& e, Var v);

/// d/dt = d/dt + xdot d/dx + xddot d/dxdot. Input must not contain xddot
/// (throws std::invalid_argument, "order overflow").
Expr total_time_derivative(const Expr& e);

Expr substitute(const Expr& e, Var v, const Expr& replacement);

/// Best-effort normalization: constant folding, 0/1 identities, flattening
/// and canonical ordering of +/* chains, cancellation of equal terms.
/// Semantics are preserved at every point admissible for the input.
Expr simplify(const Expr& e);

bool contains(const Expr& e, Var v);

/// Canonical DSL text; parse_expr(to_text(e)) reconstructs e exactly.
std::string to_text(const Expr& e);

/// Deterministic total order on trees (used for canonical ordering).
int compare(const Expr& a, const Expr& b);

/// A curve t -> x(t) with symbolically derived velocity and acceleration.
class Trajectory {
 public:
  explicit Trajectory(Expr x_of_t);

  const Expr& x() const { return x_of_t_; }
  const Expr& xdot() const { return xdot_of_t_; }
  const Expr& xddot() const { return xddot_of_t_; }

  double position(double t) const;
  double velocity(double t) const;
  double acceleration(double t) const;

  /// Phase-space point the curve occupies at time t.
  EvalPoint at(double t) const;

 private:
  Expr x_of_t_;
  Expr xdot_of_t_;
  Expr xddot_of_t_;
};

}  // namespace nullag
