#include "nullag/inertia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nullag/exactness.hpp"

namespace nullag {

namespace {

const Expr kT = Expr::variable(Var::t);

Expr linear_v(double a_o, double v_o) {
  return simplify(Expr::constant(a_o) * kT + Expr::constant(v_o));
}

double eval_t(const Expr& e, double t) { return eval(e, EvalPoint{t, 0.0, 0.0, 0.0}); }

}  // namespace

double coefficient_pole_time(double a_o, double v_o) {
  if (a_o == 0.0) {
    return v_o == 0.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  }
  return -v_o / a_o;
}

void require_pole_free(double a_o, double v_o, double t_lo, double t_hi, double pad) {
  double pole = coefficient_pole_time(a_o, v_o);
  if (std::isnan(pole)) return;
  if (pole >= t_lo - pad && pole <= t_hi + pad) {
    throw PoleInIntervalError(pole, "coefficient pole at t = " + std::to_string(pole) +
                                        " inside the padded interval [" +
                                        std::to_string(t_lo - pad) + ", " +
                                        std::to_string(t_hi + pad) + "]");
  }
}

RiccatiSolution riccati_u(double a_o, double v_o) {
  if (a_o == 0.0 && v_o == 0.0) {
    throw std::invalid_argument("degenerate Riccati data: a_o and v_o both zero");
  }
  Expr v = linear_v(a_o, v_o);
  Expr u = simplify(Expr::constant(3.0 * a_o) / v);
  return RiccatiSolution{u, v};
}

NslDerivation nsl_coefficients(double a_o, double v_o, double C1, double C2) {
  if (C1 == 0.0) throw std::invalid_argument("C1 = 0 leaves the Lagrangian undefined");
  if (a_o == 0.0 && v_o == 0.0) {
    throw std::invalid_argument("degenerate coefficients: a_o and v_o both zero");
  }
  Expr v = linear_v(a_o, v_o);
  Expr g1 = simplify(Expr::constant(C1) * pow(v, 3));
  Expr g2 = simplify(Expr::constant(-C1 * a_o) * pow(v, 2));
  Expr g3 = simplify(Expr::constant(C1 * C2) * pow(v, 2));
  LagrangianSpec L = nonstandard_lagrangian(g1, g2, g3);
  return NslDerivation{a_o, v_o, C1, C2, g1, g2, g3, L};
}

ConditionResiduals coefficient_condition_residuals(const NslDerivation& d, double t) {
  const Expr g1 = d.g1, g2 = d.g2, g3 = d.g3;
  const Expr g1d = simplify(partial_derivative(g1, Var::t));
  const Expr g2d = simplify(partial_derivative(g2, Var::t));
  const Expr g3d = simplify(partial_derivative(g3, Var::t));

  Expr r1 = g2 / g1 + (1.0 / 3.0) * (g1d / g1);
  Expr r2 = g2d / g1 - 0.5 * (g1d / g1) * (g2 / g1) + pow(g2, 2) / (2.0 * pow(g1, 2));
  Expr r3 = g3d / g1 - 0.5 * (g1d / g1) * (g3 / g1) + (g3 / g1) * (g2 / (2.0 * g1));

  return ConditionResiduals{eval_t(r1, t), eval_t(r2, t), eval_t(r3, t)};
}

OdeForm verify_inertia_nsl(const NslDerivation& d, const DomainBox& box) {
  require_pole_free(d.a_o, d.v_o, box.t.lo, box.t.hi);
  return derive_ode(d.lagrangian);
}

OdeCheck check_ode_form(const OdeForm& ode, const LagrangianSpec& L, const DomainBox& box,
                        std::size_t n_samples, double q_tol, double p_floor) {
  auto admissible = [&](const EvalPoint& p) {
    return admissible_for(ode.Q, p, box.guard) && admissible_for(ode.P, p, box.guard) &&
           admissible_for(L.body(), p, box.guard);
  };
  std::vector<EvalPoint> points = sample_admissible(box, n_samples, admissible);

  OdeCheck check;
  check.samples = points.size();
  check.min_abs_p = std::numeric_limits<double>::infinity();
  for (const EvalPoint& p : points) {
    check.max_abs_q = std::max(check.max_abs_q, std::fabs(eval(ode.Q, p, box.guard)));
    check.min_abs_p = std::min(check.min_abs_p, std::fabs(eval(ode.P, p, box.guard)));
  }
  check.pass = check.max_abs_q <= q_tol && check.min_abs_p >= p_floor;
  return check;
}

InertiaExactness inertia_exactness_relations(const CoefficientSet& c) {
  InertiaExactness rel;
  rel.r_end = eval_t(c.f1, 1.0) + eval_t(c.f2, 1.0) + eval_t(c.f3, 1.0) + eval_t(c.f4, 1.0);
  rel.r_start = eval_t(c.f3, 0.0) + 0.5 * eval_t(c.f1, 0.0);
  EndpointResiduals general = standard_endpoint_residuals(c, EndConditions{0.0, 1.0, 1.0, 2.0});
  rel.general_r_end = general.r_end;
  rel.general_r_start = general.r_start;
  return rel;
}

double riccati_numeric_crosscheck(double a_o, double v_o, const std::vector<double>& t_grid) {
  if (t_grid.empty()) return 0.0;
  if (v_o == 0.0) {
    throw PoleInIntervalError(0.0, "u(0) undefined: v_o = 0");
  }
  std::vector<double> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  if (grid.front() < 0.0) {
    throw std::invalid_argument("crosscheck grid times must be nonnegative");
  }
  require_pole_free(a_o, v_o, 0.0, grid.back(), 0.01);

  RiccatiSolution closed = riccati_u(a_o, v_o);

  const double h = 1e-3;
  auto rhs = [](double u) { return -u * u / 3.0; };
  auto rk4_step = [&](double u, double step) {
    double k1 = rhs(u);
    double k2 = rhs(u + 0.5 * step * k1);
    double k3 = rhs(u + 0.5 * step * k2);
    double k4 = rhs(u + step * k3);
    return u + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  double t = 0.0;
  double u = 3.0 * a_o / v_o;
  double worst = 0.0;
  for (double target : grid) {
    while (t < target) {
      double step = std::min(h, target - t);
      u = rk4_step(u, step);
      t += step;
    }
    double reference = eval_t(closed.u, target);
    worst = std::max(worst, std::fabs(u - reference));
  }
  return worst;
}

}  // namespace nullag
