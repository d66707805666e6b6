#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "khayyam/core.hpp"
#include "khayyam/error.hpp"

namespace khayyam {
namespace {

TEST(EvaluateCubic, SpecExamples) {
  EXPECT_EQ(evaluate_cubic(CubicEquation{0, 1, -2}, 1.0), 0.0);
  EXPECT_EQ(evaluate_cubic(CubicEquation{0, 0, 0}, 7.0), 343.0);
  EXPECT_LT(std::abs(evaluate_cubic(CubicEquation{-3, 0, 1}, 0.65270)), 1e-3);
}

TEST(EvaluateCubic, HornerMatchesNaiveEvaluation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 100000; ++i) {
    const CubicEquation eq{u(rng), u(rng), u(rng)};
    const double x = u(rng);
    const long double exact = ((static_cast<long double>(x) + eq.A) * x + eq.B) * x + eq.C;
    const double horner = evaluate_cubic(eq, x);
    const double naive = x * x * x + eq.A * x * x + eq.B * x + eq.C;
    // Both are within a few ulps of the sum of term magnitudes.
    const double terms = std::abs(x * x * x) + std::abs(eq.A * x * x) + std::abs(eq.B * x) + std::abs(eq.C);
    const double ulp = std::numeric_limits<double>::epsilon() * terms;
    ASSERT_LE(std::abs(horner - naive), 4.0 * ulp) << "x=" << x;
    ASSERT_LE(std::abs(static_cast<long double>(horner) - exact), 4.0L * ulp);
  }
}

TEST(EvaluateConic, SpecExamples) {
  const QuadraticForm<double> parabola{1, 0, 0, 0, -1, 0};
  const QuadraticForm<double> circle{1, 0, 1, -2, 0, 0};
  const QuadraticForm<double> hyperbola{0, 1, 0, 1, 0, -2};
  EXPECT_EQ(evaluate_form(parabola, 2.0, 4.0), 0.0);
  EXPECT_EQ(evaluate_form(circle, 1.0, 1.0), 0.0);
  EXPECT_EQ(evaluate_form(hyperbola, 1.0, 1.0), 0.0);
}

TEST(SpeciesIds, StringRoundTrip) {
  for (SpeciesId id : kAllSpecies) {
    EXPECT_EQ(species_from_string(to_string(id)), id);
  }
  EXPECT_EQ(number_of(SpeciesId::S12), 12);
  EXPECT_FALSE(species_from_string("S14").has_value());
}

TEST(SpeciesInstance, BuildersValidateParameters) {
  EXPECT_NO_THROW(species_bl(SpeciesId::S1, 1.0, 2.0));
  EXPECT_NO_THROW(species_ac(SpeciesId::S5, 3.0, 1.0));
  EXPECT_NO_THROW(species_abl(SpeciesId::S12, 6.0, std::sqrt(11.0), 6.0 / 11.0));
  EXPECT_THROW(species_bl(SpeciesId::S1, 0.0, 2.0), DomainError);
  EXPECT_THROW(species_bl(SpeciesId::S1, 1.0, -2.0), DomainError);
  EXPECT_THROW(species_ac(SpeciesId::S1, 1.0, 1.0), DomainError);
  EXPECT_THROW(species_bl(SpeciesId::S7, 1.0, 1.0), DomainError);
  EXPECT_THROW(species_abl(SpeciesId::S7, 1.0, std::nan(""), 1.0), DomainError);
}

TEST(SpeciesInstance, ParameterUsageMatchesTable) {
  for (SpeciesId id : kAllSpecies) {
    const ParamUse use = params_of(id);
    const int n = number_of(id);
    EXPECT_EQ(use.a, n >= 4) << n;
    EXPECT_EQ(use.b, n <= 3 || n >= 7) << n;
    EXPECT_EQ(use.c, n >= 4 && n <= 6) << n;
    EXPECT_EQ(use.l, n <= 3 || n >= 7) << n;
  }
}

}  // namespace
}  // namespace khayyam
