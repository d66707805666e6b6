#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "khayyam/conics.hpp"
#include "khayyam/trials.hpp"

namespace khayyam {
namespace {

void expect_form(const QuadraticForm<double>& q, std::array<double, 6> want, double tol = 0.0) {
  const auto got = q.coefficients();
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i], want[i], tol) << "coefficient " << i;
}

/// The same conic up to a nonzero scalar.
void expect_proportional(const QuadraticForm<double>& q, std::array<double, 6> want, double tol) {
  const auto got = q.coefficients();
  std::size_t k = 0;
  while (want[k] == 0.0) ++k;
  const double s = got[k] / want[k];
  ASSERT_NE(s, 0.0);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i], s * want[i], tol) << "coefficient " << i;
}

TEST(BuildTriple, SpeciesOne) {
  const ConicTriple t = build_triple(species_bl(SpeciesId::S1, 1.0, 2.0));
  expect_form(t.working_1.form, {1, 0, 0, 0, -1, 0});
  expect_form(t.working_2.form, {1, 0, 1, -2, 0, 0});
  expect_form(t.hidden.form, {0, 1, 0, 1, 0, -2});
  EXPECT_EQ(t.working_1.kind, ConicKind::Parabola);
  EXPECT_EQ(t.working_2.kind, ConicKind::Circle);
  EXPECT_EQ(t.hidden.kind, ConicKind::AsymptoticHyperbola);
}

TEST(BuildTriple, SpeciesFive) {
  const ConicTriple t = build_triple(species_ac(SpeciesId::S5, 3.0, 1.0));
  expect_proportional(t.working_1.form, {0, 1, 0, 0, 0, -1}, 0.0);
  expect_proportional(t.working_2.form, {0, 0, 1, 1, 0, -3}, 0.0);
  expect_proportional(t.hidden.form, {-1, 0, 0, 3, -1, 0}, 0.0);
}

TEST(BuildTriple, SpeciesTwelveVanishesAtItsRoots) {
  const double b = std::sqrt(11.0), l = 6.0 / 11.0;
  const ConicTriple t = build_triple(species_abl(SpeciesId::S12, 6.0, b, l));
  expect_proportional(t.working_1.form, {1, 0, 1, -72.0 / 11.0, 0, 36.0 / 11.0}, 1e-14);
  expect_proportional(t.working_2.form, {0, 1, 0, b, 0, -b * l}, 1e-14);
  EXPECT_EQ(t.working_1.kind, ConicKind::Circle);
  EXPECT_EQ(t.working_2.kind, ConicKind::AsymptoticHyperbola);
  for (double x : {1.0, 2.0, 3.0}) {
    const double y = b * l / x - b;  // from x(y+b)=bl
    EXPECT_LT(normalized_residual(t.working_1, x, y), 1e-14) << x;
    EXPECT_LT(normalized_residual(t.hidden, x, y), 1e-14) << x;
  }
}

TEST(BuildTriple, KindsMatchTheTableForEverySpecies) {
  std::mt19937_64 rng(3);
  for (SpeciesId id : kAllSpecies) {
    const SpeciesRow& row = species_row(id);
    for (int i = 0; i < 20; ++i) {
      const ConicTriple t = build_triple(random_species(id, rng));
      EXPECT_EQ(t.working_1.kind, row.kinds[0]) << to_string(id);
      EXPECT_EQ(t.working_2.kind, row.kinds[1]) << to_string(id);
      EXPECT_EQ(t.hidden.kind, row.kinds[2]) << to_string(id);
    }
  }
}

TEST(ConicKindOf, Examples) {
  EXPECT_EQ(conic_kind_of({1, 0, 0, 0, -1, 0}), CurveClass::Parabola);
  EXPECT_EQ(conic_kind_of({1, 0, 1, -2, 0, 0}), CurveClass::Circle);
  EXPECT_EQ(conic_kind_of({0, 1, 0, 0, 0, -4}), CurveClass::Hyperbola);
  EXPECT_THROW(conic_kind_of({0, 0, 0, 1, 1, 1}), DegenerateConic);
}

TEST(MakeConic, RejectsWrongKind) {
  EXPECT_THROW(make_conic({1, 0, 0, 0, -1, 0}, ConicKind::Circle), KindError);
  EXPECT_THROW(make_conic({1, 0, 1, -2, 0, 0}, ConicKind::Parabola), KindError);
  EXPECT_THROW(make_conic({1, 0, 1, 0, 0, 1}, ConicKind::Circle), DegenerateConic);
}

TEST(MakeConic, FramesOfSpeciesOne) {
  const ConicTriple t = build_triple(species_bl(SpeciesId::S1, 1.0, 2.0));
  // Circle on diameter [0, l].
  EXPECT_EQ(t.working_2.frame.origin.x, 1.0);
  EXPECT_EQ(t.working_2.frame.origin.y, 0.0);
  EXPECT_EQ(*t.working_2.frame.radius, 1.0);
  ASSERT_EQ(t.working_2.frame.vertices.size(), 2u);
  // Parabola x^2 = b y with parameter b and vertex at the origin.
  EXPECT_EQ(t.working_1.frame.origin.x, 0.0);
  EXPECT_EQ(t.working_1.frame.origin.y, 0.0);
  EXPECT_DOUBLE_EQ(*t.working_1.parameter_p, 1.0);
  // x(y + b) = bl has asymptotes x = 0 and y = -b.
  ASSERT_EQ(t.hidden.frame.asymptotes.size(), 2u);
  EXPECT_EQ(t.hidden.frame.origin.x, 0.0);
  EXPECT_EQ(t.hidden.frame.origin.y, -1.0);
}

TEST(MakeConic, ParabolaParameterIsTheSegmentB) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const SpeciesInstance s = random_species(SpeciesId::S2, rng);
    const ConicTriple t = build_triple(s);
    EXPECT_NEAR(*t.working_1.parameter_p, *s.b, 1e-12 * *s.b);
  }
}

TEST(AsymptoticRectangle, SpecExamples) {
  const ImplicitConic h = make_conic({0, 1, 0, 0, 0, -4}, ConicKind::AsymptoticHyperbola);
  EXPECT_NEAR(asymptotic_rectangle(h, 2, 2), 4.0, 1e-12);
  EXPECT_NEAR(asymptotic_rectangle(h, 8, 0.5), 4.0, 1e-12);
  const ImplicitConic g = make_conic({0, 1, 0, 1, 0, -2}, ConicKind::AsymptoticHyperbola);
  EXPECT_NEAR(asymptotic_rectangle(g, 1, 1), 2.0, 1e-12);
  EXPECT_THROW(asymptotic_rectangle(h, 1, 1), OffCurveError);
  const ImplicitConic p = make_conic({1, 0, 0, 0, -1, 0}, ConicKind::Parabola);
  EXPECT_THROW(asymptotic_rectangle(p, 1, 1), KindError);
}

/// Ordinate of an asymptotic hyperbola of the table (linear in y) at x.
double ordinate(const QuadraticForm<double>& q, double x) {
  return -((q.xx * x + q.x) * x + q.c) / (q.xy * x + q.y);
}

TEST(AsymptoticRectangle, ConstantAlongEveryTableHyperbola) {
  std::mt19937_64 rng(21);
  for (SpeciesId id : kAllSpecies) {
    const ConicTriple t = build_triple(random_species(id, rng));
    for (ConicRole role : {ConicRole::Working1, ConicRole::Working2, ConicRole::Hidden}) {
      const ImplicitConic& c = t[role];
      if (c.kind != ConicKind::AsymptoticHyperbola) continue;
      double first = -1.0;
      for (int k = 0; k < 100; ++k) {
        const double x = 0.05 + 0.1 * k;
        if (std::abs(c.form.xy * x + c.form.y) < 1e-3) continue;
        const double r = asymptotic_rectangle(c, x, ordinate(c.form, x));
        if (first < 0.0) first = r;
        EXPECT_NEAR(r, first, 1e-10 * first) << to_string(id) << " x=" << x;
      }
    }
  }
}

TEST(LocusHeight, SpecExamples) {
  EXPECT_DOUBLE_EQ(locus_height(LocusKind::SemicircleMean, {2, 1}), 1.0);
  EXPECT_DOUBLE_EQ(locus_height(LocusKind::ParabolaMean, {4, 1}), 2.0);
  EXPECT_DOUBLE_EQ(locus_height(LocusKind::DiameterHyperbolaMean, {3, 1}), 2.0);
  EXPECT_THROW(locus_height(LocusKind::AsymptoticRectangle, {1, 1}), DomainError);
  EXPECT_THROW(locus_height(LocusKind::SemicircleMean, {2, 3}), DomainError);
  EXPECT_THROW(locus_height(LocusKind::ParabolaMean, {-1, 1}), DomainError);
}

TEST(LocusHeight, PointsLieOnTheMatchingConic) {
  for (int k = 1; k <= 100; ++k) {
    const double ab = 3.0;
    const double ah = ab * k / 101.0;
    const double hb = 0.07 * k;

    const double semi = locus_height(LocusKind::SemicircleMean, {ab, ah});
    EXPECT_NEAR(semi * semi, ah * (ab - ah), 1e-12 * ab * ab);
    EXPECT_NEAR(ah * ah + semi * semi - ab * ah, 0.0, 1e-12 * ab * ab);

    const double para = locus_height(LocusKind::ParabolaMean, {ab, hb});
    EXPECT_NEAR(para * para, ab * hb, 1e-12 * ab * hb);

    const double hyp = locus_height(LocusKind::DiameterHyperbolaMean, {ab, hb});
    EXPECT_NEAR(hyp * hyp, (ab + hb) * hb, 1e-12 * (ab + hb) * hb);
  }
}

TEST(SpeciesRow, TableText) {
  const SpeciesRow& r11 = species_row(SpeciesId::S11);
  EXPECT_EQ(r11.working_1, "y²=(x+l)(x+a)");
  EXPECT_EQ(r11.hidden, "by=x(x+a)");
  EXPECT_EQ(species_row(SpeciesId::S12).working_2, "x(y+b)=bl");
}

}  // namespace
}  // namespace khayyam
