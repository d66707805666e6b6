#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "khayyam/classifier.hpp"
#include "khayyam/conics.hpp"
#include "khayyam/poly.hpp"
#include "khayyam/rational.hpp"
#include "khayyam/solver.hpp"
#include "khayyam/trials.hpp"

namespace khayyam {
namespace {

using QP = UniPoly<Rational>;
using Q = QuadraticForm<Rational>;

TEST(UniPoly, Arithmetic) {
  const QP p{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
  const QP q{Rational(1), Rational(1)};                // x + 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p * q).degree(), 3);
  EXPECT_TRUE((p - p).is_zero());
  const auto [quot, rem] = divide(p, q);
  EXPECT_EQ(quot, (QP{Rational(-1), Rational(1)}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(p.derivative(), (QP{Rational(0), Rational(2)}));
  EXPECT_THROW(divide(p, QP{}), ZeroPolynomial);
}

TEST(EliminateY, SpeciesOneParabolaAndCircle) {
  // y = x^2 into y^2 = x(2 - x): x^4 + x^2 - 2x.
  const Q parabola{1, 0, 0, 0, -1, 0};
  const Q circle{1, 0, 1, -2, 0, 0};
  const QP r = eliminate_y(parabola, circle);
  const QP want{Rational(0), Rational(-2), Rational(1), Rational(0), Rational(1)};
  const auto [quot, rem] = divide(r, want);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quot.degree(), 0);
}

TEST(EliminateY, SpeciesOneParabolaAndHidden) {
  const Q parabola{1, 0, 0, 0, -1, 0};
  const Q hidden{0, 1, 0, 1, 0, -2};
  const QP r = eliminate_y(parabola, hidden);
  const QP cubic = cubic_poly(ExactCubic{0, 1, -2});
  const auto [quot, rem] = divide(r, cubic);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quot.degree(), 0);
}

TEST(EliminateY, SpeciesTwelveCircleAndHyperbola) {
  const ExactSpecies s = species_abl(SpeciesId::S12, Rational(6), Rational(1), Rational(6, 11));
  // b = 1 keeps the rationals exact while l = 6/11 mirrors the spec's case.
  const auto forms = exact_forms(s);
  const QP r = eliminate_y(forms[0], forms[1]);
  const QP cubic = cubic_poly(signed_cubic(s));
  const auto [quot, rem] = divide(r, cubic);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quot.degree(), 1);
  // The cofactor vanishes at x = l.
  EXPECT_EQ(quot(Rational(6, 11)), 0);
}

TEST(EliminateY, ProportionalFormsAreRejected) {
  const Q p{1, 0, 0, 0, -1, 0};
  const Q q{2, 0, 0, 0, -2, 0};
  EXPECT_THROW(eliminate_y(p, q), ProportionalConics);
}

TEST(EliminateY, EveryPairOfEverySpeciesIsDivisible) {
  std::mt19937_64 rng(17);
  for (SpeciesId id : kAllSpecies) {
    for (int i = 0; i < 20; ++i) {
      const ExactSpecies s = random_exact_species(id, rng);
      const auto forms = exact_forms(s);
      const QP cubic = cubic_poly(signed_cubic(s));
      for (auto [u, v] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const QP r = eliminate_y(forms[static_cast<std::size_t>(u)], forms[static_cast<std::size_t>(v)]);
        ASSERT_FALSE(r.is_zero());
        EXPECT_TRUE(divide(r, cubic).second.is_zero()) << to_string(id) << " pair " << u << v;
      }
    }
  }
}

void expect_roots(const std::vector<RealRoot>& got, std::vector<RealRoot> want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i].value, want[i].value, tol);
    EXPECT_EQ(got[i].multiplicity, want[i].multiplicity);
  }
}

TEST(RealRoots, SpecExamples) {
  expect_roots(real_roots(UniPoly<double>{-1, 0, 1}), {{-1, 1}, {1, 1}}, 1e-14);
  expect_roots(real_roots(UniPoly<double>{-2, 1, 0, 1}), {{1, 1}}, 1e-14);
  expect_roots(real_roots(UniPoly<double>{1, 0, -3, 1}),
               {{-0.5320888862379561, 1}, {0.6527036446661393, 1}, {2.879385241571817, 1}}, 1e-12);
}

TEST(RealRoots, MultipleAndZeroRoots) {
  // x^2 (x - 1)^2 (x + 2)
  const UniPoly<double> p = UniPoly<double>{0, 0, 1} * UniPoly<double>{1, -2, 1} * UniPoly<double>{2, 1};
  expect_roots(real_roots(p), {{-2, 1}, {0, 2}, {1, 2}}, 1e-7);
  EXPECT_TRUE(real_roots(UniPoly<double>{1, 0, 1}).empty());
  EXPECT_THROW(real_roots(UniPoly<double>{}), ZeroPolynomial);
}

TEST(RealRoots, RandomFactoredQuartics) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    std::vector<double> r{u(rng), u(rng), u(rng), u(rng)};
    std::sort(r.begin(), r.end());
    if (r[1] - r[0] < 1e-3 || r[2] - r[1] < 1e-3 || r[3] - r[2] < 1e-3) continue;
    UniPoly<double> p = UniPoly<double>::constant(1.0);
    for (double x : r) p = p * UniPoly<double>{-x, 1};
    const auto roots = real_roots(p);
    ASSERT_EQ(roots.size(), 4u) << i;
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(roots[k].value, r[k], 1e-8);
  }
}

}  // namespace
}  // namespace khayyam
