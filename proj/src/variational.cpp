#include "nullag/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "nullag/quadrature.hpp"

namespace nullag {

const char* family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::standard: return "standard";
    case FamilyTag::standard_null: return "standard-null";
    case FamilyTag::nonstandard: return "nonstandard";
    case FamilyTag::nonstandard_null: return "nonstandard-null";
    case FamilyTag::custom: return "custom";
  }
  return "custom";
}

LagrangianSpec::LagrangianSpec(Expr body, FamilyTag tag) : body_(std::move(body)), tag_(tag) {
  if (contains(body_, Var::xddot)) {
    throw std::invalid_argument("Lagrangian body must not contain xddot");
  }
}

GaugeSpec::GaugeSpec(Expr body) : body_(std::move(body)) {
  if (contains(body_, Var::xdot) || contains(body_, Var::xddot)) {
    throw std::invalid_argument("gauge function body must depend on t and x only");
  }
}

void validate(const EndConditions& ends) {
  if (!(ends.t_o < ends.t_e)) {
    throw std::invalid_argument("end conditions require t_o < t_e");
  }
}

Expr el_residual(const LagrangianSpec& L) {
  Expr momentum = partial_derivative(L.body(), Var::xdot);
  Expr r = total_time_derivative(momentum) - partial_derivative(L.body(), Var::x);
  return simplify(r);
}

NullnessReport is_null(const LagrangianSpec& L, const DomainBox& box, std::size_t n_samples,
                       double tol) {
  if (n_samples < 1) throw std::invalid_argument("is_null requires n_samples >= 1");
  Expr residual = el_residual(L);

  auto admissible = [&](const EvalPoint& p) {
    return admissible_for(residual, p, box.guard) && admissible_for(L.body(), p, box.guard);
  };
  std::vector<EvalPoint> points = sample_admissible(box, n_samples, admissible);

  NullnessReport report;
  report.samples_used = points.size();
  report.tolerance = tol;
  report.worst_point = points.empty() ? EvalPoint{} : points.front();
  for (const EvalPoint& p : points) {
    double r = eval(residual, p, box.guard);
    double scale = std::max(1.0, std::fabs(eval(L.body(), p, box.guard)));
    double scaled = std::fabs(r) / scale;
    if (scaled >= report.max_abs_residual) {
      if (scaled > report.max_abs_residual) report.worst_point = p;
      report.max_abs_residual = scaled;
    }
  }
  report.is_null = report.max_abs_residual <= tol;
  return report;
}

LagrangianSpec gauge_derivative(const GaugeSpec& G, FamilyTag tag) {
  return LagrangianSpec(simplify(total_time_derivative(G.body())), tag);
}

OdeForm derive_ode(const LagrangianSpec& L) {
  Expr r = el_residual(L);
  Expr q = simplify(substitute(r, Var::xddot, Expr::constant(0.0)));
  Expr at_one = substitute(r, Var::xddot, Expr::constant(1.0));
  Expr p = simplify(at_one - q);
  return OdeForm{p, q};
}

namespace {

// phase-space point along a trajectory, with the Lagrangian's own guard
double lagrangian_on_path(const LagrangianSpec& L, const Trajectory& path, double t) {
  EvalPoint p = path.at(t);
  try {
    return eval(L.body(), p);
  } catch (const EvalError& e) {
    throw SingularityError(t, std::string("singular Lagrangian on path at t = ") +
                                  std::to_string(t) + ": " + e.what());
  }
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<Trajectory> endpoint_matched_paths(const EndConditions& ends, std::size_t n_paths,
                                               std::uint64_t seed) {
  validate(ends);
  const double span = ends.t_e - ends.t_o;
  const double slope = (ends.x_e - ends.x_o) / span;
  const Expr t = Expr::variable(Var::t);
  Expr line = simplify(Expr::constant(ends.x_o - slope * ends.t_o) + Expr::constant(slope) * t);

  std::vector<Trajectory> paths;
  paths.emplace_back(line);
  const std::size_t n_perturbed = n_paths > 0 ? n_paths - 1 : 0;
  for (std::size_t j = 0; j < n_perturbed; ++j) {
    // stratified amplitudes over [0.05, 0.2]; wave number cycles 1..3
    double u = static_cast<double>(mix(seed, j) >> 11) * 0x1.0p-53;
    double amplitude = 0.05 + 0.15 * (static_cast<double>(j) + u) / static_cast<double>(n_perturbed);
    int wave = static_cast<int>(j % 3) + 1;
    double omega = wave * std::numbers::pi / span;
    Expr bump = Expr::constant(amplitude) * sin(Expr::constant(omega) * (t - Expr::constant(ends.t_o)));
    paths.emplace_back(simplify(line + bump));
  }
  return paths;
}

double path_independence_certificate(const LagrangianSpec& L, const EndConditions& ends,
                                     std::size_t n_paths, double quad_tol, std::uint64_t seed) {
  if (n_paths < 2) throw std::invalid_argument("path independence needs at least 2 paths");
  std::vector<Trajectory> paths = endpoint_matched_paths(ends, n_paths, seed);

  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const Trajectory& path : paths) {
    auto f = [&](double t) { return lagrangian_on_path(L, path, t); };
    QuadratureResult q = integrate_to_tolerance(f, ends.t_o, ends.t_e, quad_tol);
    if (first) {
      lo = hi = q.value;
      first = false;
    } else {
      lo = std::min(lo, q.value);
      hi = std::max(hi, q.value);
    }
  }
  return hi - lo;
}

}  // namespace nullag
