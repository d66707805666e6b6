#include "khayyam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace khayyam {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMergeRadius = 1e-7;

struct CubicValue {
  double f;
  double df;
};

CubicValue value_and_slope(const CubicEquation& eq, double x) {
  const double f = evaluate_cubic(eq, x);
  const double df = (3.0 * x + 2.0 * eq.A) * x + eq.B;
  return {f, df};
}

/// Newton inside a sign-change bracket, falling back to bisection whenever a
/// step would leave it.
double guarded_newton(const CubicEquation& eq, double lo, double hi) {
  const bool rising = evaluate_cubic(eq, hi) > 0.0;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const CubicValue v = value_and_slope(eq, x);
    if (v.f == 0.0) return x;
    if ((v.f > 0.0) == rising) {
      hi = x;
    } else {
      lo = x;
    }
    const double step = v.df != 0.0 ? v.f / v.df : std::numeric_limits<double>::infinity();
    // A Newton step this small is already at rounding level; it may land on
    // the bracket edge, which must not trigger a bisection away from x.
    if (std::abs(step) <= 1e-13 * std::abs(x)) return x - step;
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= kEps * std::abs(x)) return next;
    x = next;
  }
  return x;
}

double polish(const CubicEquation& eq, double x0) {
  if (!std::isfinite(x0)) return x0;
  const double f0 = evaluate_cubic(eq, x0);
  if (f0 == 0.0) return x0;
  // Look for a sign change around the estimate.
  double h = 1e-9 * std::max(1.0, std::abs(x0));
  for (int k = 0; k < 40; ++k, h *= 4.0) {
    const double lo = x0 - h;
    const double hi = x0 + h;
    const double flo = evaluate_cubic(eq, lo);
    const double fhi = evaluate_cubic(eq, hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) != (fhi < 0.0)) return guarded_newton(eq, lo, hi);
    if (h > 1e-3 * std::max(1.0, std::abs(x0))) break;
  }
  // No sign change nearby: an even-multiplicity root. Descend on |f| with
  // Newton steps, accepting only improvements.
  double x = x0;
  double best = std::abs(f0);
  for (int it = 0; it < 60; ++it) {
    const CubicValue v = value_and_slope(eq, x);
    if (v.df == 0.0) break;
    const double next = x - v.f / v.df;
    const double fn = std::abs(evaluate_cubic(eq, next));
    if (!(fn < best)) break;
    best = fn;
    x = next;
  }
  return x;
}

}  // namespace

std::vector<RealRoot> oracle_cubic_roots(const CubicEquation& eq) {
  const double a = eq.A, b = eq.B, c = eq.C;
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  std::vector<RealRoot> roots;
  if (p == 0.0 && q == 0.0) {
    roots.push_back({-shift, 3});
  } else if (disc > 0.0) {
    // One real root; take the cube root of the larger-magnitude term to avoid
    // cancellation and recover the other from u v = -p/3.
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(-half_q - std::copysign(sq, q));
    const double t = u != 0.0 ? u - third_p / u : 0.0;
    roots.push_back({t - shift, 1});
  } else if (disc < 0.0) {
    const double r = 2.0 * std::sqrt(-third_p);
    double arg = (3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p);
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const double t = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
      roots.push_back({t - shift, 1});
    }
  } else {
    roots.push_back({3.0 * q / p - shift, 1});
    roots.push_back({-3.0 * q / (2.0 * p) - shift, 2});
  }

  for (RealRoot& r : roots) r.value = polish(eq, r.value);
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& u, const RealRoot& v) { return u.value < v.value; });

  std::vector<RealRoot> merged;
  for (const RealRoot& r : roots) {
    if (!merged.empty() &&
        std::abs(r.value - merged.back().value) <=
            kMergeRadius * std::max(1.0, std::abs(r.value))) {
      RealRoot& m = merged.back();
      const int total = m.multiplicity + r.multiplicity;
      m.value = (m.value * m.multiplicity + r.value * r.multiplicity) / total;
      m.multiplicity = total;
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

std::vector<RealRoot> oracle_positive_roots(const CubicEquation& eq) {
  std::vector<RealRoot> out;
  for (const RealRoot& r : oracle_cubic_roots(eq)) {
    if (r.value > 0.0) out.push_back(r);
  }
  return out;
}

double relative_discriminant(const CubicEquation& eq) {
  const double a = eq.A, b = eq.B, c = eq.C;
  const double t1 = 18.0 * a * b * c;
  const double t2 = -4.0 * a * a * a * c;
  const double t3 = a * a * b * b;
  const double t4 = -4.0 * b * b * b;
  const double t5 = -27.0 * c * c;
  const double norm = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + std::abs(t5);
  if (norm == 0.0) return 0.0;
  return (t1 + t2 + t3 + t4 + t5) / norm;
}

}  // namespace khayyam
