#pragma once

#include "nullag/families.hpp"
#include "nullag/variational.hpp"

namespace nullag {

struct ExactnessReport {
  double phi_start = 0.0;
  double phi_end = 0.0;
  double delta_phi = 0.0;
  bool is_exact = false;
  double tolerance = 0.0;
};

constexpr double kDefaultExactnessTolerance = 1e-9;

/// Phi(t_e, x_e) - Phi(t_o, x_o): the shift a null Lagrangian adds to the
/// action between the end conditions.
double gauge_delta(const GaugeSpec& G, const EndConditions& ends);

/// Exact iff the gauge vanishes at BOTH endpoints (strictly stronger than
/// delta_phi = 0); the report carries the endpoint values so callers can
/// apply either gate.
ExactnessReport is_exact(const GaugeSpec& G, const EndConditions& ends,
                         double tol = kDefaultExactnessTolerance);

struct EndpointResiduals {
  double r_end = 0.0;
  double r_start = 0.0;
};

/// Left-hand sides of the standard-family exactness conditions: the gauge
/// value f1 x^2/2 + f2 x t + f3 x + f4 t at each endpoint. Zero residuals
/// mean the general standard family is exact.
EndpointResiduals standard_endpoint_residuals(const CoefficientSet& c, const EndConditions& ends);

/// Gauge endpoint values (h1/h2) ln|h2 x + a4|; for generic end positions
/// they vanish exactly when h1 does at each endpoint. h2 is unconstrained.
EndpointResiduals nonstandard_endpoint_residuals(const NsCoefficients& c,
                                                 const EndConditions& ends);

/// Replaces f3 and f4 by linear interpolants that hit the closure values
/// f3(t_s) = -f1(t_s) x_s/2 and f4(t_s) = -f2(t_s) x_s at both endpoints,
/// which zeroes the endpoint residuals.
CoefficientSet endpoint_closure(const CoefficientSet& c, const EndConditions& ends);

}  // namespace nullag
