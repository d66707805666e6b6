#include "khayyam/classifier.hpp"

#include <cmath>
#include <string>

namespace khayyam {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

constexpr std::array<SignPattern, 13> kSpeciesPatterns = {{
    {0, +1, -1},   // S1  x^3 + b^2 x = b^2 l
    {0, -1, +1},   // S2  x^3 + b^2 l = b^2 x
    {0, -1, -1},   // S3  x^3 = b^2 x + b^2 l
    {+1, 0, -1},   // S4  x^3 + a x^2 = c^3
    {-1, 0, +1},   // S5  x^3 + c^3 = a x^2
    {-1, 0, -1},   // S6  x^3 = a x^2 + c^3
    {+1, +1, -1},  // S7  x^3 + a x^2 + b^2 x = b^2 l
    {+1, -1, +1},  // S8  x^3 + a x^2 + b^2 l = b^2 x
    {-1, +1, +1},  // S9  x^3 + b^2 x + b^2 l = a x^2
    {-1, -1, -1},  // S10 x^3 = a x^2 + b^2 x + b^2 l
    {+1, -1, -1},  // S11 x^3 + a x^2 = b^2 x + b^2 l
    {-1, +1, -1},  // S12 x^3 + b^2 x = a x^2 + b^2 l
    {-1, -1, +1},  // S13 x^3 + b^2 l = a x^2 + b^2 x
}};

std::string pattern_text(SignPattern p) {
  auto s = [](int v) { return v > 0 ? std::string("+") : v < 0 ? std::string("-") : std::string("0"); };
  return "(" + s(p.a) + "," + s(p.b) + "," + s(p.c) + ")";
}

}  // namespace

SignPattern sign_pattern(const CubicEquation& eq) {
  return {sign_of(eq.A), sign_of(eq.B), sign_of(eq.C)};
}

SignPattern species_pattern(SpeciesId id) {
  return kSpeciesPatterns.at(static_cast<std::size_t>(number_of(id) - 1));
}

PatternOutcome classify_pattern(SignPattern p) {
  for (SpeciesId id : kAllSpecies) {
    if (species_pattern(id) == p) return {id, std::nullopt};
  }
  if (p.c == 0) return {std::nullopt, ClassifyFailure::Degenerate};
  if (p.a == 0 && p.b == 0 && p.c < 0) return {std::nullopt, ClassifyFailure::PureCube};
  // Remaining patterns have no negative coefficient: every term sits on one side.
  return {std::nullopt, ClassifyFailure::ExcludedAllPositive};
}

SpeciesInstance classify(const CubicEquation& eq) {
  if (!std::isfinite(eq.A) || !std::isfinite(eq.B) || !std::isfinite(eq.C)) {
    throw DomainError("cubic coefficients must be finite");
  }
  const SignPattern pattern = sign_pattern(eq);
  const PatternOutcome outcome = classify_pattern(pattern);
  if (outcome.failure) {
    const std::string where = "sign pattern " + pattern_text(pattern) + ": ";
    switch (*outcome.failure) {
      case ClassifyFailure::ExcludedAllPositive:
        throw ClassificationError(
            *outcome.failure,
            where + "all terms are positive on one side, so no positive root exists "
                    "(a positive magnitude cannot equal zero)");
      case ClassifyFailure::PureCube:
        throw ClassificationError(*outcome.failure,
                                  where + "x^3 = c^3 is not among the thirteen conic species");
      case ClassifyFailure::Degenerate:
        throw ClassificationError(*outcome.failure,
                                  where + "zero constant term: the equation reduces below a "
                                          "genuine cubic case");
    }
  }

  SpeciesInstance s;
  s.id = *outcome.species;
  const ParamUse use = params_of(s.id);
  if (use.a) s.a = std::abs(eq.A);
  if (use.b) s.b = std::sqrt(std::abs(eq.B));
  if (use.c) s.c = std::cbrt(std::abs(eq.C));
  if (use.l) s.l = std::abs(eq.C) / std::abs(eq.B);
  validate(s);
  return s;
}

}  // namespace khayyam
