#pragma once

#include <functional>

namespace nullag {

struct QuadratureResult {
  double value = 0.0;
  int panels = 0;
  double estimated_error = 0.0;
};

/// Composite 5-point Gauss-Legendre over `panels` equal panels, with
/// compensated summation so the result is independent of evaluation order.
double composite_gauss5(const std::function<double(double)>& f, double a, double b, int panels);

/// Doubles the panel count from `initial_panels` until the change between
/// successive refinements drops below `tol` (or `max_panels` is reached);
/// the change is the reported error estimate.
QuadratureResult integrate_to_tolerance(const std::function<double(double)>& f, double a, double b,
                                        double tol, int initial_panels = 64, int max_panels = 4096);

/// Classic recursive adaptive Simpson; cross-check mode for the main rule.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace nullag
