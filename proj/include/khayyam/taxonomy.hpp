#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "khayyam/conics.hpp"
#include "khayyam/core.hpp"

namespace khayyam {

/// The five families: species grouped by the kinds of their working pair.
enum class Family { I = 1, II, III, IV, V };

struct FamilyInfo {
  Family id;
  std::string_view name;  ///< e.g. "Circle + Parabola"
  std::vector<SpeciesId> members;
  SpeciesId representative;
  std::array<ConicKind, 2> kinds;  ///< unordered pair
};

inline constexpr std::array<Family, 5> kAllFamilies = {Family::I, Family::II, Family::III,
                                                       Family::IV, Family::V};

std::string_view to_string(Family f);
const FamilyInfo& family_info(Family f);
Family family_of(SpeciesId id);

/// Parameter sign changes plus optional axis reflections x -> -x, y -> -y.
struct SignFlip {
  int a = 1;
  int b = 1;
  int c = 1;
  int l = 1;
  bool mirror_x = false;
  bool mirror_y = false;

  bool is_identity() const {
    return a == 1 && b == 1 && c == 1 && l == 1 && !mirror_x && !mirror_y;
  }
  friend bool operator==(const SignFlip&, const SignFlip&) = default;
};

/// "{l:-1}", "{a:-1, c:-1, mirror_y}", "{}" for the identity.
std::string to_string(const SignFlip& f);

template <class T>
QuadraticForm<T> mirror(QuadraticForm<T> q, bool mirror_x, bool mirror_y) {
  if (mirror_x) {
    q.xy = T(-q.xy);
    q.x = T(-q.x);
  }
  if (mirror_y) {
    q.xy = T(-q.xy);
    q.y = T(-q.y);
  }
  return q;
}

/// Species table evaluated at the flipped parameters, then mirrored.
template <class T>
std::array<QuadraticForm<T>, 3> flipped_forms(SpeciesId id, const SignedParams<T>& p,
                                              const SignFlip& f) {
  const SignedParams<T> flipped{T(p.a * f.a), T(p.b * f.b), T(p.c * f.c), T(p.l * f.l)};
  auto forms = species_forms(id, flipped);
  for (auto& q : forms) q = mirror(q, f.mirror_x, f.mirror_y);
  return forms;
}

/// Scaled so the largest coefficient has magnitude 1 and the first nonzero
/// coefficient is positive.
QuadraticForm<double> normalize(const QuadraticForm<double>& q);

/// The triple's species table with the flip substituted, normalized.
std::array<QuadraticForm<double>, 3> apply_flip(const ConicTriple& triple, const SignFlip& f);

/// First flip (in a fixed enumeration: parameter flips before mirrors, fewer
/// bits first) mapping src's triple onto dst's conic by conic, up to a nonzero
/// scalar per conic and permutation among same-kind conics. Compared exactly
/// over the rationals. Throws FamilyMismatch across families.
std::optional<SignFlip> find_collapse(SpeciesId src, SpeciesId dst);

struct CollapseResult {
  SpeciesId src;
  SpeciesId dst;
  Family family;
  std::optional<SignFlip> flip;
};

/// find_collapse over every ordered pair of distinct species within a family.
std::vector<CollapseResult> collapse_experiment();

/// Plain-text report of collapse_experiment, one pair per line.
std::string collapse_report(const std::vector<CollapseResult>& results);

}  // namespace khayyam
