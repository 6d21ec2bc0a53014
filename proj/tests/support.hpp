#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "nullag/exactness.hpp"
#include "nullag/expr.hpp"
#include "nullag/families.hpp"
#include "nullag/parse.hpp"
#include "nullag/sampling.hpp"
#include "nullag/variational.hpp"

namespace nullag::testing {

/// |a - b| <= tol * max(1, |a|, |b|): absolute near zero, relative for large
/// magnitudes (keeps agreement checks meaningful next to poles).
inline bool close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

/// Central finite difference d e/d v at p, step scaled to the coordinate.
inline double fd_partial(const Expr& e, const EvalPoint& p, Var v, double h = 1e-6) {
  EvalPoint hi = p, lo = p;
  double step = h * std::max(1.0, std::fabs(coordinate(p, v)));
  switch (v) {
    case Var::t: hi.t += step; lo.t -= step; break;
    case Var::x: hi.x += step; lo.x -= step; break;
    case Var::xdot: hi.xdot += step; lo.xdot -= step; break;
    case Var::xddot: hi.xddot += step; lo.xddot -= step; break;
  }
  return (eval(e, hi) - eval(e, lo)) / (2.0 * step);
}

/// Finite-difference Euler-Lagrange residual: expands d/dt(dL/dxdot) - dL/dx
/// through nested central differences of plain evaluations only, so it is
/// independent of the symbolic differentiation path.
inline double fd_el_residual(const Expr& L, const EvalPoint& p, double h = 1e-5) {
  auto dLdxdot = [&](const EvalPoint& q) { return fd_partial(L, q, Var::xdot, h); };
  auto nested = [&](Var v) {
    EvalPoint hi = p, lo = p;
    double step = h * std::max(1.0, std::fabs(coordinate(p, v)));
    switch (v) {
      case Var::t: hi.t += step; lo.t -= step; break;
      case Var::x: hi.x += step; lo.x -= step; break;
      case Var::xdot: hi.xdot += step; lo.xdot -= step; break;
      case Var::xddot: hi.xddot += step; lo.xddot -= step; break;
    }
    return (dLdxdot(hi) - dLdxdot(lo)) / (2.0 * step);
  };
  return nested(Var::t) + p.xdot * nested(Var::x) + p.xddot * nested(Var::xdot) -
         fd_partial(L, p, Var::x, h);
}

/// DSL strings over all four variables, for differentiation/simplify/parse
/// property tests.
inline const std::vector<std::string>& expression_corpus() {
  static const std::vector<std::string> corpus = {
      "0.5*xdot^2",
      "x*xdot",
      "xdot*x + 3",
      "1/(x + 3)",
      "xdot/(x + 3)",
      "sin(t)*x + cos(t)",
      "exp(0.5*x)",
      "ln(x + 3)",
      "x^3 - 2*x + 1",
      "t^2*xdot - x/(t + 2)",
      "abs(x + 3)",
      "(x + 1)^2/(t + 2)",
      "xddot*x + xdot",
      "3.5",
      "-x + t",
      "x^2*t + x*t^2 - t",
      "exp(0.1*x*t)",
      "cos(t)*x^2 + t",
  };
  return corpus;
}

/// Gauge corpus: polynomial, logarithmic, and mixed Phi(t, x), all smooth on
/// the default box away from guarded denominators.
inline const std::vector<std::string>& gauge_corpus() {
  static const std::vector<std::string> corpus = {
      // polynomial
      "0.5*x^2",
      "x",
      "t*x",
      "0.5*t*x^2",
      "t^2*x^2",
      "x^3 - 2*x",
      "t^3*x^2 + x",
      "x*t + 3*t",
      "0.5*x^2 - 0.5*x - 0.5*t*x",
      "7",
      "t^2",
      "x^2*t + x*t^2 - t",
      // logarithmic
      "ln(x + 3)",
      "2*ln(2*x + 5)",
      "(t/(1 + t))*ln((1 + t^2)*x + 5)",
      "t*(1 - t)*ln(x + 3)",
      "(1 + t)*ln(abs(x + 4))",
      "ln(x^2 + 2)",
      "ln(x + 2 + t^2)",
      "0.5*ln(3*x + 8)",
      "(2 + sin(t))*ln(x + 4)",
      // mixed
      "x^2/(2 + t)",
      "sin(t)*x",
      "cos(t)*x^2 + t",
      "exp(t)*x",
      "x/(5 + x^2)",
      "exp(0.1*x*t)",
      "sin(x)*cos(t)",
      "t^2/(x + 4)",
      "x*exp(-t)",
      "sin(0.5*x) + cos(t)*x",
      "abs(x + 3)",
  };
  return corpus;
}

/// Null (L, Phi) pairs whose logarithm arguments stay positive along the
/// [0,1] x: 1 -> 2 path corpus (perturbed paths stay within x in [0.8, 2.2]).
inline std::vector<FamilyPair> null_pair_corpus() {
  auto time = [](const char* src) { return parse_expr(src, VarSet::time_only()); };
  std::vector<FamilyPair> pairs;
  pairs.push_back(standard_null_constants(1.0, 0.5, -0.3, 2.0));
  pairs.push_back(standard_null_constants(0.0, 0.0, 0.0, 0.0));
  pairs.push_back(standard_null_general({time("t"), time("1 - t"), time("t^2"), time("sin(t)")}));
  pairs.push_back(standard_null_general({time("exp(0.2*t)"), time("0"), time("cos(t)"), time("1")}));
  pairs.push_back(nonstandard_null_general({time("t*(1 - t)"), time("1"), 1.0}));
  pairs.push_back(nonstandard_null_general({time("1"), time("1 + t^2"), 0.5}));
  pairs.push_back(nonstandard_null_general({time("sin(t)"), time("2 + t"), 2.0}));
  pairs.push_back(time_only_null(1.0, 1.0, 1.0));
  pairs.push_back(time_only_null(2.0, 1.0, 1.0));
  {
    TestFamily fam = nonstandard_test_family(2.0, 1.0, 0.0, 3.0);
    pairs.push_back(FamilyPair{fam.lagrangian, nonstandard_test_gauge(2.0, 1.0, 3.0)});
  }
  return pairs;
}

/// Base (non-null) Lagrangians for the action shift checks; smooth along the
/// whole path corpus.
inline std::vector<LagrangianSpec> base_lagrangian_corpus() {
  std::vector<LagrangianSpec> bases;
  bases.push_back(standard_lagrangian({Expr::constant(1.0), Expr::constant(0.0)}));
  bases.push_back(standard_lagrangian({Expr::constant(1.0), Expr::constant(1.0)}));
  return bases;
}

/// Deterministic parameter stream for randomized suites.
struct ParamStream {
  std::uint64_t state;

  explicit ParamStream(std::uint64_t seed) : state(seed) {}

  double uniform01() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

}  // namespace nullag::testing
