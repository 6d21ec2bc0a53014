#include "nullag/action.hpp"

#include <cmath>
#include <string>

#include "nullag/quadrature.hpp"

namespace nullag {

namespace {

constexpr double kEndpointTolerance = 1e-9;

void check_path_meets_ends(const Trajectory& path, const EndConditions& ends) {
  double x_o = path.position(ends.t_o);
  double x_e = path.position(ends.t_e);
  if (std::fabs(x_o - ends.x_o) > kEndpointTolerance ||
      std::fabs(x_e - ends.x_e) > kEndpointTolerance) {
    throw std::invalid_argument("endpoint mismatch: trajectory passes through (" +
                                std::to_string(x_o) + ", " + std::to_string(x_e) +
                                ") instead of (" + std::to_string(ends.x_o) + ", " +
                                std::to_string(ends.x_e) + ")");
  }
}

}  // namespace

ActionResult action_integral(const LagrangianSpec& L, const Trajectory& path,
                             const EndConditions& ends, double quad_tol, QuadMethod method) {
  validate(ends);
  check_path_meets_ends(path, ends);

  auto integrand = [&](double t) {
    EvalPoint p = path.at(t);
    try {
      return eval(L.body(), p);
    } catch (const EvalError& e) {
      throw SingularityError(t, std::string("singular Lagrangian on path at t = ") +
                                    std::to_string(t) + ": " + e.what());
    }
  };

  if (method == QuadMethod::simpson) {
    double value = adaptive_simpson(integrand, ends.t_o, ends.t_e, quad_tol);
    return ActionResult{value, 0, quad_tol};
  }
  QuadratureResult q = integrate_to_tolerance(integrand, ends.t_o, ends.t_e, quad_tol);
  return ActionResult{q.value, q.panels, q.estimated_error};
}

double gauge_shift_check(const LagrangianSpec& L, const LagrangianSpec& L_null, const GaugeSpec& G,
                         const Trajectory& path, const EndConditions& ends, double quad_tol) {
  LagrangianSpec combined(simplify(L.body() + L_null.body()), FamilyTag::custom);
  double shifted = action_integral(combined, path, ends, quad_tol).value;
  double base = action_integral(L, path, ends, quad_tol).value;
  double delta = gauge_delta(G, ends);
  return std::fabs(shifted - base - delta);
}

}  // namespace nullag
