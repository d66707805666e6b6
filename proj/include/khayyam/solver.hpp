#pragma once

#include <type_traits>
#include <vector>

#include "khayyam/conics.hpp"
#include "khayyam/core.hpp"
#include "khayyam/poly.hpp"

namespace khayyam {

inline constexpr double kDefaultTolerance = 1e-10;

/// Relative agreement required between a read-off root and the oracle root.
inline constexpr double kAgreementTolerance = 1e-9;

/// True when every 2x2 minor of the coefficient vectors vanishes (exactly for
/// rationals, to rounding for doubles).
template <class T>
bool proportional(const QuadraticForm<T>& p, const QuadraticForm<T>& q) {
  const auto u = p.coefficients();
  const auto v = q.coefficients();
  double scale = 0.0;
  if constexpr (std::is_floating_point_v<T>) {
    double mu = 0.0, mv = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      mu = std::max(mu, std::abs(u[i]));
      mv = std::max(mv, std::abs(v[i]));
    }
    scale = 1e-13 * mu * mv;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      const T minor = T(u[i] * v[j] - u[j] * v[i]);
      if constexpr (std::is_floating_point_v<T>) {
        if (std::abs(minor) > scale) return false;
      } else {
        if (minor != T{}) return false;
      }
    }
  }
  return true;
}

/// Resultant of two conics with respect to y: a polynomial in x of degree at
/// most 4 whose roots are the abscissas of their common points.
///
/// Each conic is read as P(y) = p2 y^2 + p1(x) y + p0(x) and the resultant is
/// taken at its true degree in y: the 2x2 Bezout form when both are
/// quadratic, p1^2 q0 - p1 p0 q1 + p0^2 q2 when P is linear, p1 q0 - p0 q1
/// when both are linear. Throws ProportionalConics for proportional inputs.
template <class T>
UniPoly<T> eliminate_y(const QuadraticForm<T>& p, const QuadraticForm<T>& q) {
  if (proportional(p, q)) throw ProportionalConics("conics are proportional; nothing to eliminate");
  using P = UniPoly<T>;
  const P p2 = P::constant(p.yy);
  const P p1{p.y, p.xy};
  const P p0{p.c, p.x, p.xx};
  const P q2 = P::constant(q.yy);
  const P q1{q.y, q.xy};
  const P q0{q.c, q.x, q.xx};
  auto degree_in_y = [](const P& c2, const P& c1) { return !c2.is_zero() ? 2 : !c1.is_zero() ? 1 : 0; };
  const int dp = degree_in_y(p2, p1);
  const int dq = degree_in_y(q2, q1);

  if (dp == 2 && dq == 2) {
    const P s = p2 * q0 - p0 * q2;
    return s * s - (p2 * q1 - p1 * q2) * (p1 * q0 - p0 * q1);
  }
  if (dp == 1 && dq == 2) return p1 * p1 * q0 - p1 * p0 * q1 + p0 * p0 * q2;
  if (dp == 2 && dq == 1) return q1 * q1 * p0 - q1 * q0 * p1 + q0 * q0 * p2;
  if (dp == 1 && dq == 1) return p1 * q0 - p0 * q1;
  if (dp == 0 && dq == 0) return P::constant(T(1));
  const P& base = dp == 0 ? p0 : q0;
  const int power = dp == 0 ? dq : dp;
  P out = P::constant(T(1));
  for (int i = 0; i < power; ++i) out = out * base;
  return out;
}

/// Common real points of two conics. Each real eliminant root is
/// back-substituted into whichever conic is linear in y (the quadratic one
/// otherwise), refined by a guarded Newton step on the pair, and kept when
/// both normalized residuals are below tol (or rounding level, if larger).
std::vector<IntersectionPoint> intersect(const ImplicitConic& p, const ImplicitConic& q,
                                         double tol = kDefaultTolerance);

/// Companion ordinate from the hidden conic at abscissa x (it is linear in y
/// for every species).
double companion_ordinate(const ConicTriple& triple, double x);

/// classify -> build_triple -> intersect(working pair) -> positive roots that
/// satisfy the cubic, then compared against the closed-form oracle. An empty
/// root list is a valid outcome. Throws ClassificationError for excluded cubics.
SolveReport solve_khayyam(const CubicEquation& eq, double tol = kDefaultTolerance);

/// Same as solve_khayyam for a species given by its parameters.
SolveReport solve_species(const SpeciesInstance& s, double tol = kDefaultTolerance);

/// Equal counts with multiplicity and pairwise relative difference below
/// kAgreementTolerance.
bool roots_agree(const std::vector<AcceptedRoot>& roots, const std::vector<RealRoot>& oracle);

}  // namespace khayyam
