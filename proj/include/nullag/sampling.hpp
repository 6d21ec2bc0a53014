#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nullag/expr.hpp"

namespace nullag {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Sampling region plus the determinism/rejection knobs. Defaults keep the
/// working interval at [0,1] in time and stay clear of the common
/// denominators' poles.
struct DomainBox {
  Interval t{0.0, 1.0};
  Interval x{-2.0, 2.0};
  Interval xdot{-2.0, 2.0};
  Interval xddot{-2.0, 2.0};
  std::uint64_t seed = 42;
  double guard = 1e-6;  // singularity rejection threshold for denominators
};

/// Point drawn for sample index `index`: each index derives its own
/// substream, so results do not depend on evaluation order.
EvalPoint sample_point(const DomainBox& box, std::uint64_t index, std::uint64_t attempt = 0);

/// n admissible points; a point is retried (up to 1000 attempts per index)
/// while `admissible` rejects it. Throws SamplingExhaustedError otherwise.
std::vector<EvalPoint> sample_admissible(const DomainBox& box, std::size_t n,
                                         const std::function<bool(const EvalPoint&)>& admissible);

/// True when every denominator and log argument of e stays at least `guard`
/// in magnitude at p and the value is finite.
bool admissible_for(const Expr& e, const EvalPoint& p, double guard);

}  // namespace nullag
