#pragma once

#include "nullag/exactness.hpp"
#include "nullag/variational.hpp"

namespace nullag {

enum class QuadMethod {
  gauss_legendre,
  simpson,
};

struct ActionResult {
  double value = 0.0;
  int panels = 0;  // 0 for the adaptive Simpson mode
  double estimated_error = 0.0;
};

constexpr double kDefaultQuadTolerance = 1e-10;

/// Action integral of L along the path between the end conditions. The path
/// must meet the end positions within 1e-9. A vanishing denominator along
/// the path raises SingularityError with the offending time.
ActionResult action_integral(const LagrangianSpec& L, const Trajectory& path,
                             const EndConditions& ends, double quad_tol = kDefaultQuadTolerance,
                             QuadMethod method = QuadMethod::gauss_legendre);

/// |A[L + L_null] - A[L] - (Phi(t_e) - Phi(t_o))|; the discrepancy of the
/// action decomposition. Passes when it stays within 10 * quad_tol.
double gauge_shift_check(const LagrangianSpec& L, const LagrangianSpec& L_null, const GaugeSpec& G,
                         const Trajectory& path, const EndConditions& ends,
                         double quad_tol = kDefaultQuadTolerance);

}  // namespace nullag
