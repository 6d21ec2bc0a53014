#include "nullag/families.hpp"

#include <stdexcept>
#include <string>

namespace nullag {

namespace {

void require_time_only(const Expr& e, const char* name) {
  if (contains(e, Var::x) || contains(e, Var::xdot) || contains(e, Var::xddot)) {
    throw std::invalid_argument(std::string(name) + " must be an expression in t only");
  }
}

const Expr kT = Expr::variable(Var::t);
const Expr kX = Expr::variable(Var::x);
const Expr kXdot = Expr::variable(Var::xdot);

}  // namespace

LagrangianSpec standard_lagrangian(const StandardParams& p) {
  require_time_only(p.alpha, "alpha");
  require_time_only(p.beta, "beta");
  Expr body = 0.5 * (p.alpha * pow(kXdot, 2) - p.beta * pow(kX, 2));
  return LagrangianSpec(simplify(body), FamilyTag::standard);
}

GaugeSpec standard_gauge(const CoefficientSet& c) {
  require_time_only(c.f1, "f1");
  require_time_only(c.f2, "f2");
  require_time_only(c.f3, "f3");
  require_time_only(c.f4, "f4");
  Expr body = 0.5 * c.f1 * pow(kX, 2) + c.f2 * kX * kT + c.f3 * kX + c.f4 * kT;
  return GaugeSpec(simplify(body));
}

FamilyPair standard_null_general(const CoefficientSet& c) {
  GaugeSpec gauge = standard_gauge(c);
  return FamilyPair{gauge_derivative(gauge, FamilyTag::standard_null), gauge};
}

FamilyPair standard_null_constants(double c1, double c2, double c3, double c4) {
  CoefficientSet c;
  c.f1 = Expr::constant(c1);
  c.f2 = Expr::constant(c2);
  c.f3 = Expr::constant(c3);
  c.f4 = Expr::constant(c4);
  return standard_null_general(c);
}

TestFamily standard_test_family(const CoefficientSet& c) {
  require_time_only(c.f1, "f1");
  require_time_only(c.f2, "f2");
  require_time_only(c.f3, "f3");
  require_time_only(c.f4, "f4");
  Expr body = c.f1 * kXdot * kX + c.f2 * (kXdot * kT + kX) + c.f3 * kXdot + c.f4;
  Expr residual = partial_derivative(c.f1, Var::t) * kX +
                  partial_derivative(c.f2, Var::t) * kT + partial_derivative(c.f3, Var::t);
  return TestFamily{LagrangianSpec(simplify(body), FamilyTag::custom), simplify(residual)};
}

LagrangianSpec nonstandard_lagrangian(const Expr& g1, const Expr& g2, const Expr& g3) {
  require_time_only(g1, "g1");
  require_time_only(g2, "g2");
  require_time_only(g3, "g3");
  Expr body = 1.0 / (g1 * kXdot + g2 * kX + g3);
  return LagrangianSpec(simplify(body), FamilyTag::nonstandard);
}

bool nonstandard_is_degenerate(const Expr& g1, const Expr& g2) {
  return simplify(g1).is_constant(0.0) && simplify(g2).is_constant(0.0);
}

TestFamily nonstandard_test_family(double a1, double a2, double a3, double a4) {
  if (a1 == 0.0) throw std::invalid_argument("nonstandard test family requires a1 != 0");
  if (a2 == 0.0) throw std::invalid_argument("nonstandard test family requires a2 != 0");
  Expr den = a2 * kX + a3 * kT + Expr::constant(a4);
  Expr body = a1 * kXdot / den;
  Expr residual = Expr::constant(-a1 * a3) / pow(den, 2);
  return TestFamily{LagrangianSpec(simplify(body), FamilyTag::nonstandard), simplify(residual)};
}

GaugeSpec nonstandard_test_gauge(double a1, double a2, double a4) {
  if (a2 == 0.0) throw std::invalid_argument("nonstandard test gauge requires a2 != 0");
  Expr body = Expr::constant(a1 / a2) * ln(a2 * kX + Expr::constant(a4));
  return GaugeSpec(simplify(body));
}

GaugeSpec nonstandard_gauge(const NsCoefficients& c) {
  require_time_only(c.h1, "h1");
  require_time_only(c.h2, "h2");
  Expr body = (c.h1 / c.h2) * ln(c.h2 * kX + Expr::constant(c.a4));
  return GaugeSpec(simplify(body));
}

FamilyPair nonstandard_null_general(const NsCoefficients& c) {
  GaugeSpec gauge = nonstandard_gauge(c);
  return FamilyPair{gauge_derivative(gauge, FamilyTag::nonstandard_null), gauge};
}

FamilyPair time_only_null(double b1, double b2, double b3) {
  if (b2 == 0.0) throw std::invalid_argument("time-only family requires b2 != 0");
  Expr den = b2 * kT + Expr::constant(b3);
  Expr body = Expr::constant(b1) / den;
  Expr gauge_body = Expr::constant(b1 / b2) * ln(den);
  return FamilyPair{LagrangianSpec(simplify(body), FamilyTag::custom),
                    GaugeSpec(simplify(gauge_body))};
}

}  // namespace nullag
