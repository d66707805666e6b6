#pragma once

#include <vector>

#include "khayyam/core.hpp"

namespace khayyam {

/// Real roots of a monic cubic by the closed form: depressed cubic, Cardano
/// for one real root, the trigonometric form for three. Each root is then
/// polished by bisection-guarded Newton. Shares no code with the elimination
/// route so it can serve as an independent check.
std::vector<RealRoot> oracle_cubic_roots(const CubicEquation& eq);

/// The oracle's strictly positive roots.
std::vector<RealRoot> oracle_positive_roots(const CubicEquation& eq);

/// Cubic discriminant divided by the sum of the magnitudes of its terms; near
/// zero at the tangency boundary where two roots merge.
double relative_discriminant(const CubicEquation& eq);

}  // namespace khayyam
