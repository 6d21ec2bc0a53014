#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nullag/expr.hpp"
#include "nullag/sampling.hpp"

namespace nullag {

enum class FamilyTag {
  standard,
  standard_null,
  nonstandard,
  nonstandard_null,
  custom,
};

const char* family_tag_name(FamilyTag tag);

/// A Lagrangian L(t, x, xdot); construction rejects bodies containing xddot.
class LagrangianSpec {
 public:
  explicit LagrangianSpec(Expr body, FamilyTag tag = FamilyTag::custom);

  const Expr& body() const { return body_; }
  FamilyTag tag() const { return tag_; }

 private:
  Expr body_;
  FamilyTag tag_;
};

/// A gauge function Phi(t, x); construction rejects xdot and xddot.
class GaugeSpec {
 public:
  explicit GaugeSpec(Expr body);

  const Expr& body() const { return body_; }

 private:
  Expr body_;
};

struct NullnessReport {
  bool is_null = false;
  double max_abs_residual = 0.0;  // scaled by max(1, |L|) at each point
  EvalPoint worst_point{};
  std::size_t samples_used = 0;
  double tolerance = 0.0;
};

/// EL residual split into P*xddot + Q with P, Q free of xddot.
struct OdeForm {
  Expr P;
  Expr Q;
};

/// The times and positions that pin down an action comparison.
struct EndConditions {
  double t_o = 0.0;
  double t_e = 1.0;
  double x_o = 1.0;
  double x_e = 2.0;
};

void validate(const EndConditions& ends);

constexpr double kDefaultNullTolerance = 1e-9;

/// d/dt(dL/dxdot) - dL/dx, simplified. The result is affine in xddot.
Expr el_residual(const LagrangianSpec& L);

/// Samples the EL residual over `box`; null iff the worst residual, scaled
/// by max(1, |L|) at the point, stays within tol.
NullnessReport is_null(const LagrangianSpec& L, const DomainBox& box = DomainBox{},
                       std::size_t n_samples = 200, double tol = kDefaultNullTolerance);

/// L = dPhi/dt; the exact total derivative, so the result is always null.
LagrangianSpec gauge_derivative(const GaugeSpec& G, FamilyTag tag = FamilyTag::custom);

OdeForm derive_ode(const LagrangianSpec& L);

/// The path corpus: a straight line through the end conditions followed by
/// sine perturbations (amplitude in [0.05, 0.2], wave number cycling 1..3)
/// that vanish at both ends.
std::vector<Trajectory> endpoint_matched_paths(const EndConditions& ends, std::size_t n_paths,
                                               std::uint64_t seed = 42);

/// Integrates L along n_paths curves sharing the end conditions (straight
/// line plus sine perturbations vanishing at the ends) and returns the max
/// pairwise spread of the action values. Near zero certifies nullness.
double path_independence_certificate(const LagrangianSpec& L, const EndConditions& ends,
                                     std::size_t n_paths, double quad_tol,
                                     std::uint64_t seed = 42);

}  // namespace nullag
