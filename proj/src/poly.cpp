#include "khayyam/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace khayyam {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

/// Running bound on the rounding error of Horner evaluation at x.
double evaluation_error(const UniPoly<double>& p, double x) {
  double sum = 0.0;
  const double ax = std::abs(x);
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    sum = sum * ax + std::abs(p.coefficients()[i]);
  }
  return 4.0 * static_cast<double>(p.degree() + 1) * kEps * sum;
}

double cauchy_bound(const UniPoly<double>& p) {
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int i = 0; i < p.degree(); ++i) {
    m = std::max(m, std::abs(p.coefficients()[static_cast<std::size_t>(i)]) / lead);
  }
  return 1.0 + m;
}

/// Root of p inside [lo, hi] where p(lo), p(hi) have opposite signs.
double bracketed_root(const UniPoly<double>& p, const UniPoly<double>& dp, double lo, double hi) {
  const int sign_lo = sign_of(p(lo));
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = p(x);
    if (fx == 0.0) return x;
    if (sign_of(fx) == sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    const double dfx = dp(x);
    double next = dfx != 0.0 ? x - fx / dfx : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool converged = std::abs(next - x) <= 2.0 * kEps * std::abs(x) ||
                           hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi));
    x = next;
    if (converged) break;
  }
  return x;
}

/// Roots of p (degree >= 1) whose value is not exactly zero at 0.
std::vector<RealRoot> isolate(const UniPoly<double>& p) {
  if (p.degree() == 1) {
    return {RealRoot{-p.coefficient(0) / p.coefficient(1), 1}};
  }
  const UniPoly<double> dp = p.derivative();
  const std::vector<RealRoot> critical = isolate(dp);

  double bound = cauchy_bound(p);
  for (const RealRoot& c : critical) bound = std::max(bound, std::abs(c.value) + 1.0);

  struct Knot {
    double x;
    int sign;
    int multiplicity;  // >0 when p has a multiple root at x
  };
  std::vector<Knot> knots;
  knots.push_back({-bound, sign_of(p(-bound)), 0});
  for (const RealRoot& c : critical) {
    const double value = p(c.value);
    if (std::abs(value) <= evaluation_error(p, c.value)) {
      knots.push_back({c.value, 0, c.multiplicity + 1});
    } else {
      knots.push_back({c.value, sign_of(value), 0});
    }
  }
  knots.push_back({bound, sign_of(p(bound)), 0});

  std::vector<RealRoot> roots;
  for (std::size_t k = 0; k < knots.size(); ++k) {
    if (k > 0 && knots[k - 1].sign * knots[k].sign < 0) {
      roots.push_back({bracketed_root(p, dp, knots[k - 1].x, knots[k].x), 1});
    }
    if (knots[k].multiplicity > 0) roots.push_back({knots[k].x, knots[k].multiplicity});
  }
  return roots;
}

}  // namespace

std::vector<RealRoot> real_roots(const UniPoly<double>& p, double tol) {
  if (p.is_zero()) throw ZeroPolynomial("real_roots of the zero polynomial");
  if (p.degree() == 0) return {};

  // Exact zero roots are factored out before isolation.
  std::size_t zeros = 0;
  while (p.coefficients()[zeros] == 0.0) ++zeros;
  std::vector<RealRoot> roots;
  if (zeros > 0) {
    roots.push_back({0.0, static_cast<int>(zeros)});
    const std::vector<double> rest(p.coefficients().begin() + static_cast<long>(zeros),
                                   p.coefficients().end());
    const UniPoly<double> reduced(rest);
    if (reduced.degree() >= 1) {
      for (const RealRoot& r : isolate(reduced)) roots.push_back(r);
    }
  } else {
    roots = isolate(p);
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& u, const RealRoot& v) { return u.value < v.value; });

  // Merge clusters closer than sqrt(tol) (relative): a split double root.
  const double radius = std::sqrt(tol);
  std::vector<RealRoot> merged;
  for (const RealRoot& r : roots) {
    if (!merged.empty() &&
        std::abs(r.value - merged.back().value) <=
            radius * std::max(1.0, std::abs(r.value))) {
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

}  // namespace khayyam
