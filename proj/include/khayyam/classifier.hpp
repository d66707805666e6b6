#pragma once

#include <array>
#include <optional>

#include "khayyam/core.hpp"
#include "khayyam/error.hpp"

namespace khayyam {

/// Signs of (A, B, C), each in {-1, 0, +1}, taken without any snapping.
struct SignPattern {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

SignPattern sign_pattern(const CubicEquation& eq);

/// The sign pattern each species produces in x^3 + A x^2 + B x + C.
SignPattern species_pattern(SpeciesId id);

/// Outcome of classifying a bare sign pattern: exactly one member is set.
struct PatternOutcome {
  std::optional<SpeciesId> species;
  std::optional<ClassifyFailure> failure;
};

PatternOutcome classify_pattern(SignPattern p);

/// Rewrites the cube c^3 on the square base b^2: returns l with b^2 l = c^3.
template <class T>
T homogenize(const T& b, const T& c) {
  if (!(b > 0) || !(c > 0)) throw DomainError("homogenize needs b > 0 and c > 0");
  return T(c * c * c / (b * b));
}

/// Species and positive parameters of a cubic. Zero detection is exact.
/// Throws ClassificationError for the excluded patterns.
SpeciesInstance classify(const CubicEquation& eq);

/// The cubic a species instance stands for, with its species' sign pattern.
template <class T>
BasicCubic<T> signed_cubic(const BasicSpecies<T>& s) {
  validate(s);
  const SignedParams<T> p = signed_params(s);
  const T zero{};
  const T b2 = p.b * p.b;
  const T bl = b2 * p.l;
  const T c3 = p.c * p.c * p.c;
  switch (s.id) {
    case SpeciesId::S1: return {zero, b2, T(-bl)};
    case SpeciesId::S2: return {zero, T(-b2), bl};
    case SpeciesId::S3: return {zero, T(-b2), T(-bl)};
    case SpeciesId::S4: return {p.a, zero, T(-c3)};
    case SpeciesId::S5: return {T(-p.a), zero, c3};
    case SpeciesId::S6: return {T(-p.a), zero, T(-c3)};
    case SpeciesId::S7: return {p.a, b2, T(-bl)};
    case SpeciesId::S8: return {p.a, T(-b2), bl};
    case SpeciesId::S9: return {T(-p.a), b2, bl};
    case SpeciesId::S10: return {T(-p.a), T(-b2), T(-bl)};
    case SpeciesId::S11: return {p.a, T(-b2), T(-bl)};
    case SpeciesId::S12: return {T(-p.a), b2, T(-bl)};
    case SpeciesId::S13: return {T(-p.a), T(-b2), bl};
  }
  throw DomainError("unknown species");
}

}  // namespace khayyam
