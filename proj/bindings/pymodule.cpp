#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nullag/action.hpp"
#include "nullag/exactness.hpp"
#include "nullag/families.hpp"
#include "nullag/inertia.hpp"
#include "nullag/parse.hpp"
#include "nullag/version.hpp"

namespace py = pybind11;
using namespace nullag;

namespace {

// DSL strings are the exchange format on this surface, mirroring the CLI.
Expr lagrangian_expr(const std::string& src) { return parse_expr(src, VarSet::lagrangian_vars()); }
Expr gauge_expr(const std::string& src) { return parse_expr(src, VarSet::gauge_vars()); }
Expr time_expr(const std::string& src) { return parse_expr(src, VarSet::time_only()); }

DomainBox make_box(double guard, std::uint64_t seed) {
  DomainBox box;
  box.guard = guard;
  box.seed = seed;
  return box;
}

}  // namespace

PYBIND11_MODULE(_nullag, m) {
  m.doc() = "null Lagrangian construction and verification toolkit";
  m.attr("__version__") = kToolVersion;

  py::register_exception<nullag::ParseError>(m, "DslParseError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_ArithmeticError);
  py::register_exception<SingularityError>(m, "SingularityError", PyExc_ArithmeticError);
  py::register_exception<PoleInIntervalError>(m, "PoleInIntervalError", PyExc_ValueError);
  py::register_exception<SamplingExhaustedError>(m, "SamplingExhaustedError", PyExc_RuntimeError);

  py::class_<EvalPoint>(m, "EvalPoint")
      .def(py::init<double, double, double, double>(), py::arg("t") = 0.0, py::arg("x") = 0.0,
           py::arg("xdot") = 0.0, py::arg("xddot") = 0.0)
      .def_readonly("t", &EvalPoint::t)
      .def_readonly("x", &EvalPoint::x)
      .def_readonly("xdot", &EvalPoint::xdot)
      .def_readonly("xddot", &EvalPoint::xddot)
      .def("__repr__", [](const EvalPoint& p) {
        return "EvalPoint(t=" + std::to_string(p.t) + ", x=" + std::to_string(p.x) +
               ", xdot=" + std::to_string(p.xdot) + ", xddot=" + std::to_string(p.xddot) + ")";
      });

  py::class_<NullnessReport>(m, "NullnessReport")
      .def_readonly("is_null", &NullnessReport::is_null)
      .def_readonly("max_abs_residual", &NullnessReport::max_abs_residual)
      .def_readonly("worst_point", &NullnessReport::worst_point)
      .def_readonly("samples_used", &NullnessReport::samples_used)
      .def_readonly("tolerance", &NullnessReport::tolerance);

  py::class_<ExactnessReport>(m, "ExactnessReport")
      .def_readonly("phi_start", &ExactnessReport::phi_start)
      .def_readonly("phi_end", &ExactnessReport::phi_end)
      .def_readonly("delta_phi", &ExactnessReport::delta_phi)
      .def_readonly("is_exact", &ExactnessReport::is_exact)
      .def_readonly("tolerance", &ExactnessReport::tolerance);

  py::class_<ActionResult>(m, "ActionResult")
      .def_readonly("value", &ActionResult::value)
      .def_readonly("panels", &ActionResult::panels)
      .def_readonly("estimated_error", &ActionResult::estimated_error);

  py::class_<OdeCheck>(m, "OdeCheck")
      .def_readonly("max_abs_q", &OdeCheck::max_abs_q)
      .def_readonly("min_abs_p", &OdeCheck::min_abs_p)
      .def_readonly("samples", &OdeCheck::samples)
      .def_readonly("pass_", &OdeCheck::pass);

  // expression layer
  m.def("evaluate", [](const std::string& src, double t, double x, double xdot, double xddot) {
          return eval(parse_expr(src), EvalPoint{t, x, xdot, xddot});
        },
        py::arg("expr"), py::arg("t") = 0.0, py::arg("x") = 0.0, py::arg("xdot") = 0.0,
        py::arg("xddot") = 0.0, "Evaluate a DSL expression at a point.");

  m.def("partial", [](const std::string& src, const std::string& var) {
          Var v = var == "t" ? Var::t : var == "x" ? Var::x : var == "xdot" ? Var::xdot : Var::xddot;
          return to_text(simplify(partial_derivative(parse_expr(src), v)));
        },
        py::arg("expr"), py::arg("var"), "Symbolic partial derivative, as DSL text.");

  m.def("total_derivative", [](const std::string& src) {
          return to_text(simplify(total_time_derivative(parse_expr(src, VarSet::lagrangian_vars()))));
        },
        py::arg("expr"), "Total time derivative d/dt, as DSL text.");

  m.def("simplify_text", [](const std::string& src) { return to_text(simplify(parse_expr(src))); },
        py::arg("expr"));

  // variational layer
  m.def("el_residual", [](const std::string& lagrangian) {
          return to_text(el_residual(LagrangianSpec(lagrangian_expr(lagrangian))));
        },
        py::arg("lagrangian"), "Euler-Lagrange residual d/dt(dL/dxdot) - dL/dx, as DSL text.");

  m.def("is_null", [](const std::string& lagrangian, std::size_t samples, double tol, double guard,
                      std::uint64_t seed) {
          return is_null(LagrangianSpec(lagrangian_expr(lagrangian)), make_box(guard, seed),
                         samples, tol);
        },
        py::arg("lagrangian"), py::arg("samples") = 200, py::arg("tol") = kDefaultNullTolerance,
        py::arg("guard") = 1e-6, py::arg("seed") = 42);

  m.def("gauge_derivative", [](const std::string& gauge) {
          return to_text(gauge_derivative(GaugeSpec(gauge_expr(gauge))).body());
        },
        py::arg("gauge"), "The null Lagrangian dPhi/dt, as DSL text.");

  m.def("derive_ode", [](const std::string& lagrangian) {
          OdeForm ode = derive_ode(LagrangianSpec(lagrangian_expr(lagrangian)));
          return py::make_tuple(to_text(ode.P), to_text(ode.Q));
        },
        py::arg("lagrangian"), "(P, Q) with EL residual = P*xddot + Q.");

  m.def("path_independence", [](const std::string& lagrangian, double t0, double t1, double x0,
                                double x1, std::size_t n_paths, double quad_tol) {
          return path_independence_certificate(LagrangianSpec(lagrangian_expr(lagrangian)),
                                               EndConditions{t0, t1, x0, x1}, n_paths, quad_tol);
        },
        py::arg("lagrangian"), py::arg("t0") = 0.0, py::arg("t1") = 1.0, py::arg("x0") = 1.0,
        py::arg("x1") = 2.0, py::arg("n_paths") = 6, py::arg("quad_tol") = 1e-10);

  // families
  m.def("standard_lagrangian", [](const std::string& alpha, const std::string& beta) {
          return to_text(standard_lagrangian({time_expr(alpha), time_expr(beta)}).body());
        },
        py::arg("alpha") = "1", py::arg("beta") = "0");

  m.def("standard_null_general", [](const std::string& f1, const std::string& f2,
                                    const std::string& f3, const std::string& f4) {
          FamilyPair pair = standard_null_general(
              {time_expr(f1), time_expr(f2), time_expr(f3), time_expr(f4)});
          return py::make_tuple(to_text(pair.lagrangian.body()), to_text(pair.gauge.body()));
        },
        py::arg("f1") = "0", py::arg("f2") = "0", py::arg("f3") = "0", py::arg("f4") = "0",
        "(L, Phi) for the general standard null family.");

  m.def("standard_test_family", [](const std::string& f1, const std::string& f2,
                                   const std::string& f3, const std::string& f4) {
          TestFamily fam = standard_test_family(
              {time_expr(f1), time_expr(f2), time_expr(f3), time_expr(f4)});
          return py::make_tuple(to_text(fam.lagrangian.body()), to_text(fam.residual));
        },
        py::arg("f1") = "0", py::arg("f2") = "0", py::arg("f3") = "0", py::arg("f4") = "0",
        "(L, closed-form EL residual).");

  m.def("nonstandard_lagrangian", [](const std::string& g1, const std::string& g2,
                                     const std::string& g3) {
          return to_text(nonstandard_lagrangian(time_expr(g1), time_expr(g2), time_expr(g3)).body());
        },
        py::arg("g1"), py::arg("g2"), py::arg("g3"));

  m.def("nonstandard_test_family", [](double a1, double a2, double a3, double a4) {
          TestFamily fam = nonstandard_test_family(a1, a2, a3, a4);
          return py::make_tuple(to_text(fam.lagrangian.body()), to_text(fam.residual));
        },
        py::arg("a1") = 1.0, py::arg("a2") = 1.0, py::arg("a3") = 0.0, py::arg("a4") = 0.0);

  m.def("nonstandard_null_general", [](const std::string& h1, const std::string& h2, double a4) {
          FamilyPair pair = nonstandard_null_general({time_expr(h1), time_expr(h2), a4});
          return py::make_tuple(to_text(pair.lagrangian.body()), to_text(pair.gauge.body()));
        },
        py::arg("h1"), py::arg("h2"), py::arg("a4") = 0.0);

  m.def("time_only_null", [](double b1, double b2, double b3) {
          FamilyPair pair = time_only_null(b1, b2, b3);
          return py::make_tuple(to_text(pair.lagrangian.body()), to_text(pair.gauge.body()));
        },
        py::arg("b1"), py::arg("b2"), py::arg("b3"));

  // exactness + action
  m.def("gauge_delta", [](const std::string& gauge, double t0, double t1, double x0, double x1) {
          return gauge_delta(GaugeSpec(gauge_expr(gauge)), EndConditions{t0, t1, x0, x1});
        },
        py::arg("gauge"), py::arg("t0") = 0.0, py::arg("t1") = 1.0, py::arg("x0") = 1.0,
        py::arg("x1") = 2.0);

  m.def("is_exact", [](const std::string& gauge, double t0, double t1, double x0, double x1,
                       double tol) {
          return is_exact(GaugeSpec(gauge_expr(gauge)), EndConditions{t0, t1, x0, x1}, tol);
        },
        py::arg("gauge"), py::arg("t0") = 0.0, py::arg("t1") = 1.0, py::arg("x0") = 1.0,
        py::arg("x1") = 2.0, py::arg("tol") = kDefaultExactnessTolerance);

  m.def("action_integral", [](const std::string& lagrangian, const std::string& trajectory,
                              double t0, double t1, double quad_tol) {
          Trajectory path(time_expr(trajectory));
          EndConditions ends{t0, t1, path.position(t0), path.position(t1)};
          return action_integral(LagrangianSpec(lagrangian_expr(lagrangian)), path, ends, quad_tol);
        },
        py::arg("lagrangian"), py::arg("trajectory"), py::arg("t0") = 0.0, py::arg("t1") = 1.0,
        py::arg("quad_tol") = kDefaultQuadTolerance);

  m.def("gauge_shift_check", [](const std::string& lagrangian, const std::string& null_lagrangian,
                                const std::string& gauge, const std::string& trajectory, double t0,
                                double t1, double quad_tol) {
          Trajectory path(time_expr(trajectory));
          EndConditions ends{t0, t1, path.position(t0), path.position(t1)};
          return gauge_shift_check(LagrangianSpec(lagrangian_expr(lagrangian)),
                                   LagrangianSpec(lagrangian_expr(null_lagrangian)),
                                   GaugeSpec(gauge_expr(gauge)), path, ends, quad_tol);
        },
        py::arg("lagrangian"), py::arg("null_lagrangian"), py::arg("gauge"), py::arg("trajectory"),
        py::arg("t0") = 0.0, py::arg("t1") = 1.0, py::arg("quad_tol") = kDefaultQuadTolerance);

  // the xddot = 0 application
  m.def("derive_nsl", [](double a0, double v0, double C1, double C2, std::uint64_t seed) {
          require_pole_free(a0, v0, 0.0, 1.0);
          NslDerivation d = nsl_coefficients(a0, v0, C1, C2);
          DomainBox box = make_box(1e-3, seed);
          OdeForm ode = verify_inertia_nsl(d, box);
          OdeCheck check = check_ode_form(ode, d.lagrangian, box);
          py::dict out;
          out["g1"] = to_text(d.g1);
          out["g2"] = to_text(d.g2);
          out["g3"] = to_text(d.g3);
          out["lagrangian"] = to_text(d.lagrangian.body());
          out["P"] = to_text(ode.P);
          out["Q"] = to_text(ode.Q);
          out["max_abs_q"] = check.max_abs_q;
          out["min_abs_p"] = check.min_abs_p;
          out["pass"] = check.pass;
          return out;
        },
        py::arg("a0") = 1.0, py::arg("v0") = 1.0, py::arg("C1") = 1.0, py::arg("C2") = 1.0,
        py::arg("seed") = 42);

  m.def("riccati_crosscheck", [](double a0, double v0, const std::vector<double>& grid) {
          return riccati_numeric_crosscheck(a0, v0, grid);
        },
        py::arg("a0"), py::arg("v0"), py::arg("grid"));
}
