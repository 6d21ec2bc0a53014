#include <doctest.h>

#include <cmath>

#include "nullag/expr.hpp"
#include "nullag/parse.hpp"
#include "support.hpp"

using namespace nullag;
using nullag::testing::close;
using nullag::testing::expression_corpus;
using nullag::testing::fd_partial;

TEST_CASE("parse builds the expected trees") {
  Expr e = parse_expr("xdot*x", VarSet::lagrangian_vars());
  CHECK(e.kind() == NodeKind::mul);
  CHECK(e.lhs().kind() == NodeKind::variable);
  CHECK(e.lhs().var() == Var::xdot);
  CHECK(e.rhs().var() == Var::x);

  Expr d = parse_expr("1/(x + t)");
  CHECK(d.kind() == NodeKind::div);
  CHECK(d.lhs().is_constant(1.0));
  CHECK(d.rhs().kind() == NodeKind::add);
}

TEST_CASE("parse rejects forbidden variables, naming the offender") {
  try {
    parse_expr("ln(x) + xddot", VarSet::lagrangian_vars());
    FAIL("expected ForbiddenVariableError");
  } catch (const ForbiddenVariableError& e) {
    CHECK(e.variable() == "xddot");
  }
}

TEST_CASE("parse reports syntax errors with a position") {
  try {
    parse_expr("x + ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expr("x +* 2"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(x)"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x + 1"), ParseError);
  CHECK_THROWS_AS(parse_expr("x 2"), ParseError);
}

TEST_CASE("eval covers the documented examples") {
  EvalPoint p{0.0, 3.0, 2.0, 0.0};
  CHECK(eval(parse_expr("xdot*x"), p) == 6.0);

  // ln is ln|.|
  EvalPoint q{0.0, -std::exp(1.0), 0.0, 0.0};
  CHECK(eval(parse_expr("ln(x)"), q) == doctest::Approx(1.0).epsilon(1e-14));

  try {
    eval(parse_expr("1/x"), EvalPoint{0.0, 0.0, 0.0, 0.0});
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.kind() == EvalError::Kind::division_by_zero);
    CHECK(e.offender() == "1/x");
  }

  CHECK_THROWS_AS(eval(parse_expr("ln(x - 1)"), EvalPoint{0.0, 1.0, 0.0, 0.0}), EvalError);
}

TEST_CASE("rational powers evaluate with real-root semantics") {
  CHECK(eval(parse_expr("x^(1/2)"), EvalPoint{0, 4, 0, 0}) == doctest::Approx(2.0));
  CHECK(eval(parse_expr("x^(3/2)"), EvalPoint{0, 4, 0, 0}) == doctest::Approx(8.0));
  CHECK(eval(parse_expr("x^(1/3)"), EvalPoint{0, -8, 0, 0}) == doctest::Approx(-2.0));
  CHECK(eval(parse_expr("x^(-2)"), EvalPoint{0, 2, 0, 0}) == doctest::Approx(0.25));
  CHECK_THROWS_AS(eval(parse_expr("x^(-2)"), EvalPoint{0, 0, 0, 0}), EvalError);
  CHECK_THROWS_AS(eval(parse_expr("x^(1/2)"), EvalPoint{0, -4, 0, 0}), EvalError);
}

TEST_CASE("partial derivatives match the worked cases") {
  Expr dK = simplify(partial_derivative(parse_expr("0.5*xdot^2"), Var::xdot));
  CHECK(dK == parse_expr("xdot"));

  Expr dP = simplify(partial_derivative(parse_expr("3*xdot*x"), Var::x));
  CHECK(dP == simplify(parse_expr("3*xdot")));

  // d ln(2x + 1)/dx = 2/(2x + 1)
  Expr dL = partial_derivative(parse_expr("ln(2*x + 1)"), Var::x);
  for (double x : {0.0, 0.7, 2.0}) {
    EvalPoint p{0, x, 0, 0};
    CHECK(close(eval(dL, p), 2.0 / (2.0 * x + 1.0), 1e-12));
  }
}

TEST_CASE("total time derivative") {
  Expr a = simplify(total_time_derivative(parse_expr("0.5*x^2")));
  CHECK(a == simplify(parse_expr("x*xdot")));

  // d/dt (f3(t) x) = f3' x + f3 xdot with f3 = t^2
  Expr b = total_time_derivative(parse_expr("t^2*x"));
  for (double t : {0.2, 0.8}) {
    EvalPoint p{t, 1.3, -0.4, 0.9};
    CHECK(close(eval(b, p), 2.0 * t * 1.3 + t * t * -0.4, 1e-12));
  }

  Expr momentum = simplify(partial_derivative(parse_expr("0.5*xdot^2"), Var::xdot));
  CHECK(simplify(total_time_derivative(momentum)) == Expr::variable(Var::xddot));

  CHECK_THROWS_AS(total_time_derivative(parse_expr("xddot*x")), std::invalid_argument);
}

TEST_CASE("simplify identities") {
  CHECK(simplify(Expr::constant(0.0) * Expr::variable(Var::x) + Expr::variable(Var::t)) ==
        Expr::variable(Var::t));
  CHECK(simplify(Expr::constant(1.0) * Expr::variable(Var::xdot)) == Expr::variable(Var::xdot));
  CHECK(simplify(Expr::variable(Var::x) - Expr::variable(Var::x)) == Expr::constant(0.0));
  CHECK(simplify(parse_expr("x/x")) == Expr::constant(1.0));
  CHECK(simplify(parse_expr("x^0")) == Expr::constant(1.0));
  CHECK(simplify(parse_expr("x^1")) == Expr::variable(Var::x));
  CHECK(simplify(parse_expr("ln(abs(x))")) == ln(Expr::variable(Var::x)));
  CHECK(simplify(parse_expr("ln(exp(x))")) == Expr::variable(Var::x));
  CHECK(simplify(parse_expr("abs(-x)")) == abs(Expr::variable(Var::x)));
  CHECK(simplify(parse_expr("2*3 + 1")) == Expr::constant(7.0));
}

TEST_CASE("simplify preserves semantics over the corpus") {
  DomainBox box;
  for (const std::string& src : expression_corpus()) {
    Expr e = parse_expr(src);
    Expr s = simplify(e);
    auto admissible = [&](const EvalPoint& p) {
      return admissible_for(e, p, box.guard) && admissible_for(s, p, box.guard);
    };
    for (const EvalPoint& p : sample_admissible(box, 50, admissible)) {
      double ve = eval(e, p);
      CHECK(std::fabs(ve - eval(s, p)) <= 1e-12 * std::max(1.0, std::fabs(ve)));
    }
  }
}

TEST_CASE("simplify is idempotent over the corpus") {
  for (const std::string& src : expression_corpus()) {
    Expr once = simplify(parse_expr(src));
    CHECK(simplify(once) == once);
  }
}

TEST_CASE("parse/print round trip") {
  for (const std::string& src : expression_corpus()) {
    Expr e = parse_expr(src);
    CHECK(parse_expr(to_text(e)) == e);
    Expr s = simplify(e);
    CHECK(parse_expr(to_text(s)) == s);
  }
  // negative constants and rational exponents survive printing
  for (const char* src : {"-2*x", "x^(-2)", "x^(1/3)", "x^(-1/2)", "x*(-3)", "-(x + 1)"}) {
    Expr e = parse_expr(src);
    CHECK(parse_expr(to_text(e)) == e);
  }
}

TEST_CASE("differentiation is linear") {
  nullag::testing::ParamStream stream(7);
  DomainBox box;
  const auto& corpus = expression_corpus();
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    Expr e1 = parse_expr(corpus[i]);
    Expr e2 = parse_expr(corpus[i + 1]);
    double a = stream.uniform(-2.0, 2.0);
    double b = stream.uniform(-2.0, 2.0);
    Expr combined = Expr::constant(a) * e1 + Expr::constant(b) * e2;
    for (Var v : {Var::t, Var::x, Var::xdot}) {
      Expr lhs = partial_derivative(combined, v);
      Expr rhs = Expr::constant(a) * partial_derivative(e1, v) +
                 Expr::constant(b) * partial_derivative(e2, v);
      auto admissible = [&](const EvalPoint& p) {
        return admissible_for(lhs, p, box.guard) && admissible_for(rhs, p, box.guard);
      };
      for (const EvalPoint& p : sample_admissible(box, 100, admissible)) {
        CHECK(close(eval(lhs, p), eval(rhs, p), 1e-10));
      }
    }
  }
}

TEST_CASE("symbolic partials agree with central finite differences") {
  DomainBox box;
  box.guard = 1e-3;  // keep FD steps well away from poles
  for (const std::string& src : expression_corpus()) {
    Expr e = parse_expr(src);
    for (Var v : {Var::t, Var::x, Var::xdot, Var::xddot}) {
      Expr de = partial_derivative(e, v);
      auto admissible = [&](const EvalPoint& p) {
        return admissible_for(e, p, box.guard) && admissible_for(de, p, box.guard);
      };
      for (const EvalPoint& p : sample_admissible(box, 25, admissible)) {
        double sym = eval(de, p);
        double fd = fd_partial(e, p, v);
        CHECK(close(sym, fd, 1e-5));
      }
    }
  }
}

TEST_CASE("substitute replaces a variable") {
  Expr e = parse_expr("x^2 + t");
  Expr out = substitute(e, Var::x, Expr::constant(2.0) * Expr::variable(Var::t));
  for (double t : {0.3, 1.7}) {
    CHECK(eval(out, EvalPoint{t, 99.0, 0, 0}) == doctest::Approx(4.0 * t * t + t));
  }
}

TEST_CASE("trajectories derive velocity and acceleration symbolically") {
  Trajectory path(parse_expr("t^2 + 1", VarSet::time_only()));
  CHECK(path.position(2.0) == doctest::Approx(5.0));
  CHECK(path.velocity(2.0) == doctest::Approx(4.0));
  CHECK(path.acceleration(2.0) == doctest::Approx(2.0));
  EvalPoint p = path.at(0.5);
  CHECK(p.t == 0.5);
  CHECK(p.x == doctest::Approx(1.25));

  CHECK_THROWS_AS(Trajectory(parse_expr("x + t")), std::invalid_argument);
}

TEST_CASE("sampling is deterministic and respects the guard") {
  DomainBox box;
  Expr pole = parse_expr("1/x");
  auto admissible = [&](const EvalPoint& p) { return admissible_for(pole, p, box.guard); };
  auto a = sample_admissible(box, 20, admissible);
  auto b = sample_admissible(box, 20, admissible);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].t == b[i].t);
    CHECK(a[i].x == b[i].x);
    CHECK(std::fabs(a[i].x) >= box.guard);
    CHECK(a[i].t >= box.t.lo);
    CHECK(a[i].t <= box.t.hi);
  }

  Expr impossible = parse_expr("1/(x - x)");
  auto never = [&](const EvalPoint& p) { return admissible_for(impossible, p, box.guard); };
  CHECK_THROWS_AS(sample_admissible(box, 1, never), SamplingExhaustedError);
}
