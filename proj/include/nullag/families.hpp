#pragma once

#include "nullag/variational.hpp"

namespace nullag {

/// Alpha/beta of the quadratic Lagrangian; functions of t or constants.
struct StandardParams {
  Expr alpha = Expr::constant(1.0);
  Expr beta = Expr::constant(0.0);
};

/// The four free functions f1..f4 of the standard families (t only).
struct CoefficientSet {
  Expr f1 = Expr::constant(0.0);
  Expr f2 = Expr::constant(0.0);
  Expr f3 = Expr::constant(0.0);
  Expr f4 = Expr::constant(0.0);
};

/// h1, h2 (t only) and the constant a4 of the non-standard null family.
struct NsCoefficients {
  Expr h1 = Expr::constant(0.0);
  Expr h2 = Expr::constant(1.0);
  double a4 = 0.0;
};

struct FamilyPair {
  LagrangianSpec lagrangian;
  GaugeSpec gauge;
};

/// Test families come with a closed-form EL residual instead of a gauge.
struct TestFamily {
  LagrangianSpec lagrangian;
  Expr residual;
};

/// L = (alpha xdot^2 - beta x^2)/2.
LagrangianSpec standard_lagrangian(const StandardParams& p);

/// Phi = f1 x^2/2 + f2 x t + f3 x + f4 t.
GaugeSpec standard_gauge(const CoefficientSet& c);

/// The general standard null pair: Phi as above, L = dPhi/dt.
FamilyPair standard_null_general(const CoefficientSet& c);

/// The constant-coefficient special case, canonicalized so that Phi's
/// coefficients line up with the Lagrangian's: Phi = c1 x^2/2 + c2 x t +
/// c3 x + c4 t, L = c1 xdot x + c2 (xdot t + x) + c3 xdot + c4.
FamilyPair standard_null_constants(double c1, double c2, double c3, double c4);

/// L = f1 xdot x + f2 (xdot t + x) + f3 xdot + f4, with closed-form EL
/// residual f1' x + f2' t + f3'. Null exactly when f1, f2, f3 are constant;
/// f4 is arbitrary.
TestFamily standard_test_family(const CoefficientSet& c);

/// L = 1/(g1 xdot + g2 x + g3).
LagrangianSpec nonstandard_lagrangian(const Expr& g1, const Expr& g2, const Expr& g3);

/// True when g1 and g2 vanish identically as constants, leaving a constant
/// denominator; the object is still a (trivially null) Lagrangian.
bool nonstandard_is_degenerate(const Expr& g1, const Expr& g2);

/// L = a1 xdot/(a2 x + a3 t + a4) with closed-form residual
/// -a1 a3/(a2 x + a3 t + a4)^2. Null exactly when a3 = 0.
TestFamily nonstandard_test_family(double a1, double a2, double a3, double a4);

/// The a3 = 0 gauge: Phi = (a1/a2) ln|a2 x + a4|.
GaugeSpec nonstandard_test_gauge(double a1, double a2, double a4);

/// Phi = (h1/h2) ln|h2 x + a4|.
GaugeSpec nonstandard_gauge(const NsCoefficients& c);

/// The general non-standard null pair: Phi as above, L = dPhi/dt (the exact
/// total derivative, so nullness holds by construction).
FamilyPair nonstandard_null_general(const NsCoefficients& c);

/// L = b1/(b2 t + b3), Phi = (b1/b2) ln|b2 t + b3|. Requires b2 != 0.
FamilyPair time_only_null(double b1, double b2, double b3);

}  // namespace nullag
