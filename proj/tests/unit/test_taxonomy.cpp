#include <gtest/gtest.h>

#include <set>

#include "khayyam/taxonomy.hpp"

namespace khayyam {
namespace {

TEST(Family, SpecExamples) {
  EXPECT_EQ(family_of(SpeciesId::S1), Family::I);
  EXPECT_EQ(family_of(SpeciesId::S9), Family::IV);
  EXPECT_EQ(family_of(SpeciesId::S13), Family::V);
}

TEST(Family, PartitionsTheSpecies) {
  std::set<SpeciesId> seen;
  for (Family f : kAllFamilies) {
    const FamilyInfo& info = family_info(f);
    EXPECT_EQ(info.id, f);
    EXPECT_NE(std::find(info.members.begin(), info.members.end(), info.representative), info.members.end());
    for (SpeciesId id : info.members) {
      EXPECT_TRUE(seen.insert(id).second);
      EXPECT_EQ(family_of(id), f);
    }
  }
  EXPECT_EQ(seen.size(), 13u);
  EXPECT_EQ(family_info(Family::II).representative, SpeciesId::S3);
  EXPECT_EQ(family_info(Family::V).representative, SpeciesId::S11);
}

TEST(Family, WorkingKindsMatchTheFamilyPair) {
  for (Family f : kAllFamilies) {
    const FamilyInfo& info = family_info(f);
    for (SpeciesId id : info.members) {
      const SpeciesRow& row = species_row(id);
      std::multiset<ConicKind> got{row.kinds[0], row.kinds[1]};
      std::multiset<ConicKind> want{info.kinds[0], info.kinds[1]};
      EXPECT_EQ(got, want) << to_string(id);
    }
  }
}

TEST(SignFlip, Formatting) {
  EXPECT_EQ(to_string(SignFlip{}), "{}");
  SignFlip l;
  l.l = -1;
  EXPECT_EQ(to_string(l), "{l:-1}");
  SignFlip ac;
  ac.a = -1;
  ac.c = -1;
  ac.mirror_y = true;
  EXPECT_EQ(to_string(ac), "{a:-1, c:-1, mirror_y}");
}

TEST(FindCollapse, SpecExamples) {
  const auto s3_s2 = find_collapse(SpeciesId::S3, SpeciesId::S2);
  ASSERT_TRUE(s3_s2.has_value());
  SignFlip l;
  l.l = -1;
  EXPECT_EQ(*s3_s2, l);

  const auto s4_s5 = find_collapse(SpeciesId::S4, SpeciesId::S5);
  ASSERT_TRUE(s4_s5.has_value());
  EXPECT_EQ(s4_s5->a, -1);
  EXPECT_EQ(s4_s5->c, -1);

  const auto same = find_collapse(SpeciesId::S1, SpeciesId::S1);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(same->is_identity());

  EXPECT_THROW(find_collapse(SpeciesId::S1, SpeciesId::S2), FamilyMismatch);
}

TEST(ApplyFlip, IdentityKeepsTheTriple) {
  const ConicTriple t = build_triple(species_abl(SpeciesId::S7, 1.0, 2.0, 3.0));
  const auto forms = apply_flip(t, SignFlip{});
  EXPECT_EQ(forms[0], normalize(t.working_1.form));
  EXPECT_EQ(forms[1], normalize(t.working_2.form));
  EXPECT_EQ(forms[2], normalize(t.hidden.form));
}

TEST(CollapseExperiment, CoversEveryOrderedPairWithinFamilies) {
  const auto results = collapse_experiment();
  std::size_t expected = 0;
  for (Family f : kAllFamilies) {
    const std::size_t n = family_info(f).members.size();
    expected += n * (n - 1);
  }
  EXPECT_EQ(results.size(), expected);
  for (const CollapseResult& r : results) {
    EXPECT_EQ(family_of(r.src), r.family);
    EXPECT_EQ(family_of(r.dst), r.family);
  }
  const std::string report = collapse_report(results);
  EXPECT_NE(report.find("S3 -> S2"), std::string::npos) << report;
}

}  // namespace
}  // namespace khayyam
