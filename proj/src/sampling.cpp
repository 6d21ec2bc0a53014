#include "nullag/sampling.hpp"

#include <cmath>
#include <string>

namespace nullag {

namespace {

constexpr int kMaxAttempts = 1000;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small counter-based generator: stateless across indices, so sample i is the
// same no matter how the loop is scheduled.
struct SubStream {
  std::uint64_t state;

  SubStream(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
    state = splitmix64(splitmix64(seed ^ (index * 0x9e3779b97f4a7c15ULL)) ^ attempt);
  }

  double uniform01() {
    state = splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }

  double uniform(const Interval& iv) { return iv.lo + (iv.hi - iv.lo) * uniform01(); }
};

}  // namespace

EvalPoint sample_point(const DomainBox& box, std::uint64_t index, std::uint64_t attempt) {
  SubStream s(box.seed, index, attempt);
  EvalPoint p;
  p.t = s.uniform(box.t);
  p.x = s.uniform(box.x);
  p.xdot = s.uniform(box.xdot);
  p.xddot = s.uniform(box.xddot);
  return p;
}

std::vector<EvalPoint> sample_admissible(const DomainBox& box, std::size_t n,
                                         const std::function<bool(const EvalPoint&)>& admissible) {
  std::vector<EvalPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      EvalPoint p = sample_point(box, i, static_cast<std::uint64_t>(attempt));
      if (admissible(p)) {
        points.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) {
      throw SamplingExhaustedError("sampling exhausted: no admissible point for index " +
                                   std::to_string(i) + " after " + std::to_string(kMaxAttempts) +
                                   " attempts");
    }
  }
  return points;
}

bool admissible_for(const Expr& e, const EvalPoint& p, double guard) {
  try {
    return std::isfinite(eval(e, p, guard));
  } catch (const EvalError&) {
    return false;
  }
}

}  // namespace nullag
