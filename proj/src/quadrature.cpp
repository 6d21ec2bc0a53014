#include "nullag/quadrature.hpp"

#include <cmath>

namespace nullag {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kNodes[5] = {
    -0.9061798459386639927976, -0.5384693101056830910363, 0.0,
    0.5384693101056830910363, 0.9061798459386639927976};
constexpr double kWeights[5] = {
    0.2369268850561890875143, 0.4786286704993664680413, 0.5688888888888888888889,
    0.4786286704993664680413, 0.2369268850561890875143};

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double simpson_slice(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double fa, double b,
                       double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson_slice(a, fa, m, fm, flm);
  double right = simpson_slice(m, fm, b, fb, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double composite_gauss5(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  Kahan acc;
  for (int i = 0; i < panels; ++i) {
    double lo = a + i * h;
    double mid = lo + 0.5 * h;
    double half = 0.5 * h;
    for (int k = 0; k < 5; ++k) {
      acc.add(kWeights[k] * half * f(mid + half * kNodes[k]));
    }
  }
  return acc.sum;
}

QuadratureResult integrate_to_tolerance(const std::function<double(double)>& f, double a, double b,
                                        double tol, int initial_panels, int max_panels) {
  double value = composite_gauss5(f, a, b, initial_panels);
  int panels = initial_panels;
  double est = std::fabs(value - composite_gauss5(f, a, b, initial_panels / 2 > 0 ? initial_panels / 2 : 1));
  while (est > tol && panels < max_panels) {
    panels *= 2;
    double refined = composite_gauss5(f, a, b, panels);
    est = std::fabs(refined - value);
    value = refined;
  }
  return {value, panels, est};
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  double fa = f(a), fb = f(b);
  double m = 0.5 * (a + b);
  double fm = f(m);
  double whole = simpson_slice(a, fa, b, fb, fm);
  return simpson_recurse(f, a, fa, b, fb, m, fm, whole, tol, 40);
}

}  // namespace nullag
