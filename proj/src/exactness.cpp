#include "nullag/exactness.hpp"

#include <cmath>
#include <string>

namespace nullag {

namespace {

double eval_at_end(const Expr& e, double t, double x) {
  try {
    return eval(e, EvalPoint{t, x, 0.0, 0.0});
  } catch (const EvalError& err) {
    throw SingularityError(t, std::string("gauge singular at endpoint t = ") + std::to_string(t) +
                                  ": " + err.what());
  }
}

// linear-in-t expression hitting y_o at t_o and y_e at t_e
Expr linear_through(double t_o, double y_o, double t_e, double y_e) {
  double slope = (y_e - y_o) / (t_e - t_o);
  Expr body = Expr::constant(y_o - slope * t_o) + Expr::constant(slope) * Expr::variable(Var::t);
  return simplify(body);
}

}  // namespace

double gauge_delta(const GaugeSpec& G, const EndConditions& ends) {
  validate(ends);
  return eval_at_end(G.body(), ends.t_e, ends.x_e) - eval_at_end(G.body(), ends.t_o, ends.x_o);
}

ExactnessReport is_exact(const GaugeSpec& G, const EndConditions& ends, double tol) {
  validate(ends);
  ExactnessReport report;
  report.phi_start = eval_at_end(G.body(), ends.t_o, ends.x_o);
  report.phi_end = eval_at_end(G.body(), ends.t_e, ends.x_e);
  report.delta_phi = report.phi_end - report.phi_start;
  report.tolerance = tol;
  report.is_exact = std::max(std::fabs(report.phi_start), std::fabs(report.phi_end)) <= tol;
  return report;
}

EndpointResiduals standard_endpoint_residuals(const CoefficientSet& c, const EndConditions& ends) {
  validate(ends);
  const Expr phi = standard_gauge(c).body();
  return EndpointResiduals{eval_at_end(phi, ends.t_e, ends.x_e),
                           eval_at_end(phi, ends.t_o, ends.x_o)};
}

EndpointResiduals nonstandard_endpoint_residuals(const NsCoefficients& c,
                                                 const EndConditions& ends) {
  validate(ends);
  const Expr phi = nonstandard_gauge(c).body();
  return EndpointResiduals{eval_at_end(phi, ends.t_e, ends.x_e),
                           eval_at_end(phi, ends.t_o, ends.x_o)};
}

CoefficientSet endpoint_closure(const CoefficientSet& c, const EndConditions& ends) {
  validate(ends);
  double f1_o = eval_at_end(c.f1, ends.t_o, 0.0);
  double f1_e = eval_at_end(c.f1, ends.t_e, 0.0);
  double f2_o = eval_at_end(c.f2, ends.t_o, 0.0);
  double f2_e = eval_at_end(c.f2, ends.t_e, 0.0);

  CoefficientSet closed;
  closed.f1 = c.f1;
  closed.f2 = c.f2;
  closed.f3 = linear_through(ends.t_o, -0.5 * f1_o * ends.x_o, ends.t_e, -0.5 * f1_e * ends.x_e);
  closed.f4 = linear_through(ends.t_o, -f2_o * ends.x_o, ends.t_e, -f2_e * ends.x_e);
  return closed;
}

}  // namespace nullag
