#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullag/action.hpp"
#include "nullag/exactness.hpp"
#include "nullag/families.hpp"
#include "nullag/inertia.hpp"
#include "nullag/parse.hpp"
#include "nullag/report.hpp"
#include "nullag/version.hpp"

namespace {

using namespace nullag;

// exit codes: 0 pass, 1 fail, 2 parse/usage, 3 sampling exhausted,
// 4 singularity, 5 pole in interval
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSampling = 3;
constexpr int kExitSingularity = 4;
constexpr int kExitPole = 5;

struct CommonOpts {
  bool json = false;
  std::uint64_t seed = 42;
  double tol = kDefaultNullTolerance;
  std::size_t samples = 200;
  std::string domain;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.json, "emit the report as JSON");
  cmd->add_option("--seed", opts.seed, "sampling seed (default 42)");
  cmd->add_option("--tol", opts.tol, "residual tolerance (default 1e-9)");
  cmd->add_option("--samples", opts.samples, "sample count (default 200)");
  cmd->add_option("--domain", opts.domain,
                  "sampling box, e.g. t=0..1,x=-2..2,xdot=-2..2,xddot=-2..2");
}

DomainBox parse_domain(const std::string& spec, std::uint64_t seed) {
  DomainBox box;
  box.seed = seed;
  if (spec.empty()) return box;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string item =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;

    std::size_t eq = item.find('=');
    std::size_t dots = item.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
      throw CLI::ValidationError("--domain", "expected name=lo..hi, got '" + item + "'");
    }
    std::string name = item.substr(0, eq);
    double lo = std::stod(item.substr(eq + 1, dots - eq - 1));
    double hi = std::stod(item.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--domain", "empty interval for '" + name + "'");
    if (name == "t") box.t = {lo, hi};
    else if (name == "x") box.x = {lo, hi};
    else if (name == "xdot") box.xdot = {lo, hi};
    else if (name == "xddot") box.xddot = {lo, hi};
    else throw CLI::ValidationError("--domain", "unknown variable '" + name + "'");
  }
  return box;
}

void emit(const Json& envelope, bool json) {
  if (json) {
    std::cout << envelope.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << envelope["command"].get<std::string>() << "\n";
  for (auto& [key, value] : envelope["payload"].items()) {
    std::cout << "  " << key << ": " << value.dump() << "\n";
  }
  std::cout << "verdict: " << envelope["verdict"].get<std::string>() << "\n";
}

int verdict_code(const std::string& verdict) {
  return verdict == "fail" ? kExitFail : kExitPass;
}

// worst |a - b| / max(1, |a|, |b|) between two bodies over the box
double max_scaled_gap(const Expr& a, const Expr& b, const DomainBox& box, std::size_t samples) {
  auto admissible = [&](const EvalPoint& p) {
    return admissible_for(a, p, box.guard) && admissible_for(b, p, box.guard);
  };
  double worst = 0.0;
  for (const EvalPoint& p : sample_admissible(box, samples, admissible)) {
    double av = eval(a, p, box.guard);
    double bv = eval(b, p, box.guard);
    double gap = std::fabs(av - bv) / std::max({1.0, std::fabs(av), std::fabs(bv)});
    worst = std::max(worst, gap);
  }
  return worst;
}

// ---------------------------------------------------------------------------

int cmd_check_null(const std::string& lagrangian_src, const std::string& gauge_src,
                   const CommonOpts& opts) {
  DomainBox box = parse_domain(opts.domain, opts.seed);
  LagrangianSpec L(parse_expr(lagrangian_src, VarSet::lagrangian_vars()));
  NullnessReport report = is_null(L, box, opts.samples, opts.tol);

  Json payload;
  payload["lagrangian"] = to_text(L.body());
  payload["el_residual"] = to_text(el_residual(L));
  payload["nullness"] = to_json(report);
  if (!gauge_src.empty()) {
    GaugeSpec G(parse_expr(gauge_src, VarSet::gauge_vars()));
    LagrangianSpec derived = gauge_derivative(G);
    payload["gauge"] = to_text(G.body());
    payload["gauge_derivative"] = to_text(derived.body());
    payload["gauge_deviation"] = max_scaled_gap(L.body(), derived.body(), box, opts.samples);
  }

  Json inputs{{"lagrangian", lagrangian_src},
              {"seed", opts.seed},
              {"tol", opts.tol},
              {"samples", opts.samples}};
  if (!gauge_src.empty()) inputs["gauge"] = gauge_src;
  std::string verdict = report.is_null ? "pass" : "fail";
  emit(report_envelope("check-null", inputs, verdict, payload), opts.json);
  return verdict_code(verdict);
}

int cmd_check_exact(const std::string& gauge_src, const EndConditions& ends,
                    const CommonOpts& opts) {
  GaugeSpec G(parse_expr(gauge_src, VarSet::gauge_vars()));
  ExactnessReport report = is_exact(G, ends, opts.tol);

  Json payload;
  payload["gauge"] = to_text(G.body());
  payload["exactness"] = to_json(report);

  Json inputs{{"gauge", gauge_src}, {"t0", ends.t_o}, {"t1", ends.t_e},
              {"x0", ends.x_o},     {"x1", ends.x_e}, {"tol", opts.tol}};
  std::string verdict = report.is_exact ? "pass" : "fail";
  emit(report_envelope("check-exact", inputs, verdict, payload), opts.json);
  return verdict_code(verdict);
}

struct MakeArgs {
  std::string family;
  std::string alpha = "1", beta = "0";
  std::string f1 = "0", f2 = "0", f3 = "0", f4 = "0";
  std::string g1 = "0", g2 = "0", g3 = "1";
  std::string h1 = "0", h2 = "1";
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  double a1 = 1, a2 = 1, a3 = 0, a4 = 0;
  double b1 = 0, b2 = 1, b3 = 1;
};

int cmd_make(const MakeArgs& args, const CommonOpts& opts) {
  DomainBox box = parse_domain(opts.domain, opts.seed);
  auto coeff = [](const std::string& src) { return parse_expr(src, VarSet::time_only()); };

  std::optional<LagrangianSpec> L;
  std::optional<GaugeSpec> G;
  std::optional<Expr> closed_residual;
  std::string warning;
  bool nullness_is_the_claim = true;

  if (args.family == "standard") {
    L = standard_lagrangian(StandardParams{coeff(args.alpha), coeff(args.beta)});
    nullness_is_the_claim = false;
  } else if (args.family == "standard-null-const") {
    FamilyPair pair = standard_null_constants(args.c1, args.c2, args.c3, args.c4);
    L = pair.lagrangian;
    G = pair.gauge;
  } else if (args.family == "standard-null-general") {
    FamilyPair pair = standard_null_general(
        CoefficientSet{coeff(args.f1), coeff(args.f2), coeff(args.f3), coeff(args.f4)});
    L = pair.lagrangian;
    G = pair.gauge;
  } else if (args.family == "standard-test") {
    TestFamily fam = standard_test_family(
        CoefficientSet{coeff(args.f1), coeff(args.f2), coeff(args.f3), coeff(args.f4)});
    L = fam.lagrangian;
    closed_residual = fam.residual;
  } else if (args.family == "nonstandard") {
    Expr g1 = coeff(args.g1), g2 = coeff(args.g2), g3 = coeff(args.g3);
    if (nonstandard_is_degenerate(g1, g2)) {
      warning = "degenerate family: constant denominator (still a valid, trivially null Lagrangian)";
    }
    L = nonstandard_lagrangian(g1, g2, g3);
    nullness_is_the_claim = false;
  } else if (args.family == "nonstandard-test") {
    TestFamily fam = nonstandard_test_family(args.a1, args.a2, args.a3, args.a4);
    L = fam.lagrangian;
    closed_residual = fam.residual;
    if (args.a3 == 0.0) G = nonstandard_test_gauge(args.a1, args.a2, args.a4);
  } else if (args.family == "nonstandard-null-general") {
    FamilyPair pair =
        nonstandard_null_general(NsCoefficients{coeff(args.h1), coeff(args.h2), args.a4});
    L = pair.lagrangian;
    G = pair.gauge;
  } else if (args.family == "time-only-null") {
    FamilyPair pair = time_only_null(args.b1, args.b2, args.b3);
    L = pair.lagrangian;
    G = pair.gauge;
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + args.family + "'");
  }

  NullnessReport report = is_null(*L, box, opts.samples, opts.tol);

  Json payload;
  payload["family"] = args.family;
  payload["lagrangian"] = to_text(L->body());
  if (G) payload["gauge"] = to_text(G->body());
  if (closed_residual) payload["closed_form_residual"] = to_text(*closed_residual);
  if (!warning.empty()) payload["warning"] = warning;
  payload["nullness"] = to_json(report);

  Json inputs{{"family", args.family}, {"seed", opts.seed}, {"tol", opts.tol}};
  std::string verdict = nullness_is_the_claim ? (report.is_null ? "pass" : "fail") : "n/a";
  emit(report_envelope("make", inputs, verdict, payload), opts.json);
  return verdict_code(verdict);
}

struct ActionArgs {
  std::string lagrangian;
  std::string trajectory;
  std::string null_lagrangian;
  std::string gauge;
  double t0 = 0.0, t1 = 1.0;
  std::optional<double> x0, x1;
  double quad_tol = kDefaultQuadTolerance;
  std::string quad = "gl";
};

int cmd_action(const ActionArgs& args, const CommonOpts& opts) {
  LagrangianSpec L(parse_expr(args.lagrangian, VarSet::lagrangian_vars()));
  Trajectory path(parse_expr(args.trajectory, VarSet::time_only()));
  EndConditions ends{args.t0, args.t1, args.x0 ? *args.x0 : path.position(args.t0),
                     args.x1 ? *args.x1 : path.position(args.t1)};
  QuadMethod method = args.quad == "simpson" ? QuadMethod::simpson : QuadMethod::gauss_legendre;

  ActionResult base = action_integral(L, path, ends, args.quad_tol, method);

  Json payload;
  payload["lagrangian"] = to_text(L.body());
  payload["trajectory"] = to_text(path.x());
  payload["action"] = to_json(base);

  std::string verdict = "n/a";
  if (!args.null_lagrangian.empty() && !args.gauge.empty()) {
    LagrangianSpec L_null(parse_expr(args.null_lagrangian, VarSet::lagrangian_vars()));
    GaugeSpec G(parse_expr(args.gauge, VarSet::gauge_vars()));
    LagrangianSpec combined(simplify(L.body() + L_null.body()));
    ActionResult shifted = action_integral(combined, path, ends, args.quad_tol, method);
    double delta = gauge_delta(G, ends);
    double discrepancy = std::fabs(shifted.value - base.value - delta);
    payload["action_with_null"] = to_json(shifted);
    payload["gauge_delta"] = delta;
    payload["shift_discrepancy"] = discrepancy;
    verdict = discrepancy <= 10.0 * args.quad_tol ? "pass" : "fail";
  }

  Json inputs{{"lagrangian", args.lagrangian},
              {"trajectory", args.trajectory},
              {"t0", args.t0},
              {"t1", args.t1},
              {"quad_tol", args.quad_tol},
              {"quad", args.quad}};
  if (!args.null_lagrangian.empty()) inputs["null_lagrangian"] = args.null_lagrangian;
  if (!args.gauge.empty()) inputs["gauge"] = args.gauge;
  emit(report_envelope("action", inputs, verdict, payload), opts.json);
  return verdict_code(verdict);
}

struct DeriveArgs {
  double a0 = 1.0, v0 = 1.0, C1 = 1.0, C2 = 1.0;
  double t0 = 0.0, t1 = 1.0;
};

int cmd_derive_nsl(const DeriveArgs& args, const CommonOpts& opts) {
  require_pole_free(args.a0, args.v0, args.t0, args.t1);
  NslDerivation d = nsl_coefficients(args.a0, args.v0, args.C1, args.C2);

  // coefficient conditions on a uniform grid of the working interval
  double max_r1 = 0.0, max_r2 = 0.0, max_r3 = 0.0;
  for (int i = 0; i <= 100; ++i) {
    double t = args.t0 + (args.t1 - args.t0) * i / 100.0;
    ConditionResiduals r = coefficient_condition_residuals(d, t);
    max_r1 = std::max(max_r1, std::fabs(r.r1));
    max_r2 = std::max(max_r2, std::fabs(r.r2));
    max_r3 = std::max(max_r3, std::fabs(r.r3));
  }

  DomainBox box = parse_domain(opts.domain, opts.seed);
  box.t = {args.t0, args.t1};
  // the |Q| <= 1e-9 gate needs denominators well away from zero; see README
  box.guard = std::max(box.guard, 1e-3);
  OdeForm ode = verify_inertia_nsl(d, box);
  OdeCheck check = check_ode_form(ode, d.lagrangian, box, opts.samples);

  std::vector<double> grid;
  for (int k = 1; k <= 4; ++k) grid.push_back(args.t0 + (args.t1 - args.t0) * k / 4.0);
  double rk4_deviation = riccati_numeric_crosscheck(args.a0, args.v0, grid);
  RiccatiSolution riccati = riccati_u(args.a0, args.v0);

  bool pass = max_r1 <= 1e-10 && max_r2 <= 1e-10 && max_r3 <= 1e-10 && check.pass &&
              rk4_deviation <= 1e-8;

  Json payload;
  payload["parameters"] = Json{{"a0", args.a0}, {"v0", args.v0}, {"C1", args.C1}, {"C2", args.C2}};
  payload["g1"] = to_text(d.g1);
  payload["g2"] = to_text(d.g2);
  payload["g3"] = to_text(d.g3);
  payload["lagrangian"] = to_text(d.lagrangian.body());
  payload["condition_residual_max"] = Json{{"r1", max_r1}, {"r2", max_r2}, {"r3", max_r3}};
  payload["ode_form"] = to_json(ode);
  payload["ode_check"] = to_json(check);
  payload["riccati_u"] = to_text(riccati.u);
  payload["riccati_rk4_deviation"] = rk4_deviation;

  Json inputs{{"a0", args.a0}, {"v0", args.v0}, {"C1", args.C1},
              {"C2", args.C2}, {"t0", args.t0}, {"t1", args.t1}};
  std::string verdict = pass ? "pass" : "fail";
  emit(report_envelope("derive-nsl", inputs, verdict, payload), opts.json);
  return verdict_code(verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"null Lagrangian construction and verification toolkit"};
  app.set_version_flag("--version", nullag::kToolVersion);
  app.require_subcommand(1);

  auto* check_null = app.add_subcommand("check-null", "test whether a Lagrangian is null");
  std::string cn_lagrangian, cn_gauge;
  CommonOpts cn_opts;
  check_null->add_option("--lagrangian", cn_lagrangian, "Lagrangian DSL over t, x, xdot")
      ->required();
  check_null->add_option("--gauge", cn_gauge, "optional gauge DSL; checks L = dPhi/dt");
  add_common(check_null, cn_opts);

  auto* check_exact = app.add_subcommand("check-exact", "test whether a gauge is exact");
  std::string ce_gauge;
  EndConditions ce_ends;
  CommonOpts ce_opts;
  ce_opts.tol = kDefaultExactnessTolerance;
  check_exact->add_option("--gauge", ce_gauge, "gauge DSL over t, x")->required();
  check_exact->add_option("--t0", ce_ends.t_o, "initial time (default 0)");
  check_exact->add_option("--t1", ce_ends.t_e, "final time (default 1)");
  check_exact->add_option("--x0", ce_ends.x_o, "initial position (default 1)");
  check_exact->add_option("--x1", ce_ends.x_e, "final position (default 2)");
  add_common(check_exact, ce_opts);

  auto* make = app.add_subcommand("make", "construct a catalog family");
  MakeArgs mk;
  CommonOpts mk_opts;
  make->add_option("--family", mk.family,
                   "standard | standard-null-const | standard-null-general | standard-test | "
                   "nonstandard | nonstandard-test | nonstandard-null-general | time-only-null")
      ->required();
  make->add_option("--alpha", mk.alpha, "alpha(t) DSL");
  make->add_option("--beta", mk.beta, "beta(t) DSL");
  make->add_option("--f1", mk.f1, "f1(t) DSL");
  make->add_option("--f2", mk.f2, "f2(t) DSL");
  make->add_option("--f3", mk.f3, "f3(t) DSL");
  make->add_option("--f4", mk.f4, "f4(t) DSL");
  make->add_option("--g1", mk.g1, "g1(t) DSL");
  make->add_option("--g2", mk.g2, "g2(t) DSL");
  make->add_option("--g3", mk.g3, "g3(t) DSL");
  make->add_option("--h1", mk.h1, "h1(t) DSL");
  make->add_option("--h2", mk.h2, "h2(t) DSL");
  make->add_option("--c1", mk.c1, "constant c1");
  make->add_option("--c2", mk.c2, "constant c2");
  make->add_option("--c3", mk.c3, "constant c3");
  make->add_option("--c4", mk.c4, "constant c4");
  make->add_option("--a1", mk.a1, "constant a1");
  make->add_option("--a2", mk.a2, "constant a2");
  make->add_option("--a3", mk.a3, "constant a3");
  make->add_option("--a4", mk.a4, "constant a4");
  make->add_option("--b1", mk.b1, "constant b1");
  make->add_option("--b2", mk.b2, "constant b2");
  make->add_option("--b3", mk.b3, "constant b3");
  add_common(make, mk_opts);

  auto* action = app.add_subcommand("action", "integrate a Lagrangian along a trajectory");
  ActionArgs ac;
  CommonOpts ac_opts;
  action->add_option("--lagrangian", ac.lagrangian, "Lagrangian DSL")->required();
  action->add_option("--trajectory", ac.trajectory, "x(t) DSL over t")->required();
  action->add_option("--t0", ac.t0, "initial time (default 0)");
  action->add_option("--t1", ac.t1, "final time (default 1)");
  double ac_x0 = 0.0, ac_x1 = 0.0;
  auto* x0_opt = action->add_option("--x0", ac_x0, "expected initial position");
  auto* x1_opt = action->add_option("--x1", ac_x1, "expected final position");
  action->add_option("--null-lagrangian", ac.null_lagrangian,
                     "null Lagrangian DSL for the shift check");
  action->add_option("--gauge", ac.gauge, "gauge DSL for the shift check");
  action->add_option("--quad-tol", ac.quad_tol, "quadrature tolerance (default 1e-10)");
  action->add_option("--quad", ac.quad, "quadrature rule: gl | simpson")
      ->check(CLI::IsMember({"gl", "simpson"}));
  add_common(action, ac_opts);

  auto* derive = app.add_subcommand("derive-nsl", "derive the reciprocal Lagrangian for xddot = 0");
  DeriveArgs dv;
  CommonOpts dv_opts;
  derive->add_option("--a0", dv.a0, "initial slope of v (default 1)");
  derive->add_option("--v0", dv.v0, "initial value of v (default 1)");
  derive->add_option("--C1", dv.C1, "integration constant C1 (default 1)");
  derive->add_option("--C2", dv.C2, "integration constant C2 (default 1)");
  derive->add_option("--t0", dv.t0, "interval start (default 0)");
  derive->add_option("--t1", dv.t1, "interval end (default 1)");
  add_common(derive, dv_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check_null) return cmd_check_null(cn_lagrangian, cn_gauge, cn_opts);
    if (*check_exact) return cmd_check_exact(ce_gauge, ce_ends, ce_opts);
    if (*make) return cmd_make(mk, mk_opts);
    if (*action) {
      if (x0_opt->count() > 0) ac.x0 = ac_x0;
      if (x1_opt->count() > 0) ac.x1 = ac_x1;
      return cmd_action(ac, ac_opts);
    }
    if (*derive) return cmd_derive_nsl(dv, dv_opts);
  } catch (const nullag::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SamplingExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSampling;
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingularity;
  } catch (const PoleInIntervalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPole;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingularity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
