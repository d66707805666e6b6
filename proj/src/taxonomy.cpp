#include "khayyam/taxonomy.hpp"

#include <algorithm>
#include <cmath>

#include "khayyam/solver.hpp"

namespace khayyam {

namespace {

using K = ConicKind;
using S = SpeciesId;

const std::array<FamilyInfo, 5>& families() {
  static const std::array<FamilyInfo, 5> table = {{
      {Family::I, "Circle + Parabola", {S::S1}, S::S1, {K::Circle, K::Parabola}},
      {Family::II, "Parabola + Diameter hyperbola", {S::S2, S::S3}, S::S3,
       {K::Parabola, K::DiameterHyperbola}},
      {Family::III, "Parabola + Asymptotic hyperbola", {S::S4, S::S5, S::S6}, S::S4,
       {K::Parabola, K::AsymptoticHyperbola}},
      {Family::IV, "Circle + Asymptotic hyperbola", {S::S7, S::S9, S::S12}, S::S7,
       {K::Circle, K::AsymptoticHyperbola}},
      {Family::V, "Diameter hyperbola + Asymptotic hyperbola", {S::S8, S::S10, S::S11, S::S13},
       S::S11, {K::DiameterHyperbola, K::AsymptoticHyperbola}},
  }};
  return table;
}

// Generic rational sample points; a flip matches only if it matches at all of them.
std::vector<SignedParams<Rational>> sample_params() {
  return {
      {Rational(3, 7), Rational(5, 11), Rational(7, 13), Rational(11, 17)},
      {Rational(2, 3), Rational(13, 5), Rational(5, 2), Rational(7, 3)},
      {Rational(17, 4), Rational(3, 8), Rational(9, 5), Rational(23, 9)},
  };
}

bool flip_matches(SpeciesId src, SpeciesId dst, const SignFlip& f,
                  const std::vector<SignedParams<Rational>>& samples) {
  const auto& src_kinds = species_row(src).kinds;
  const auto& dst_kinds = species_row(dst).kinds;
  std::array<int, 3> perm = {0, 1, 2};
  do {
    bool kinds_ok = true;
    for (int i = 0; i < 3; ++i) kinds_ok = kinds_ok && src_kinds[i] == dst_kinds[perm[i]];
    if (!kinds_ok) continue;
    bool all = true;
    for (const auto& p : samples) {
      const auto lhs = flipped_forms(src, p, f);
      const auto rhs = species_forms(dst, p);
      for (int i = 0; i < 3 && all; ++i) all = proportional(lhs[i], rhs[perm[i]]);
      if (!all) break;
    }
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
  }
  return "?";
}

const FamilyInfo& family_info(Family f) { return families().at(static_cast<std::size_t>(f) - 1); }

Family family_of(SpeciesId id) {
  for (const FamilyInfo& info : families()) {
    if (std::find(info.members.begin(), info.members.end(), id) != info.members.end()) return info.id;
  }
  throw DomainError("species belongs to no family");
}

std::string to_string(const SignFlip& f) {
  std::vector<std::string> parts;
  if (f.a < 0) parts.emplace_back("a:-1");
  if (f.b < 0) parts.emplace_back("b:-1");
  if (f.c < 0) parts.emplace_back("c:-1");
  if (f.l < 0) parts.emplace_back("l:-1");
  if (f.mirror_x) parts.emplace_back("mirror_x");
  if (f.mirror_y) parts.emplace_back("mirror_y");
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "}";
}

QuadraticForm<double> normalize(const QuadraticForm<double>& q) {
  const double m = max_abs_coefficient(q);
  if (m == 0.0) return q;
  double lead = 0.0;
  for (double v : q.coefficients()) {
    if (v != 0.0) {
      lead = v;
      break;
    }
  }
  const double s = lead < 0.0 ? -1.0 / m : 1.0 / m;
  auto k = q.coefficients();
  for (double& v : k) v = v * s + 0.0;
  return QuadraticForm<double>::from(k);
}

std::array<QuadraticForm<double>, 3> apply_flip(const ConicTriple& triple, const SignFlip& f) {
  auto forms = flipped_forms(triple.species.id, signed_params(triple.species), f);
  for (auto& q : forms) q = normalize(q);
  return forms;
}

std::optional<SignFlip> find_collapse(SpeciesId src, SpeciesId dst) {
  if (family_of(src) != family_of(dst)) {
    throw FamilyMismatch(std::string(to_string(src)) + " is in family " +
                         std::string(to_string(family_of(src))) + ", " +
                         std::string(to_string(dst)) + " in family " +
                         std::string(to_string(family_of(dst))));
  }
  const ParamUse use = params_of(src);
  const std::array<bool, 4> present = {use.a, use.b, use.c, use.l};
  const auto samples = sample_params();
  // Bits 0..3 flip a, b, c, l; bits 4, 5 mirror x, y. Ascending masks try
  // every parameter-only flip before any mirror.
  for (unsigned mask = 0; mask < 64; ++mask) {
    bool valid = true;
    for (unsigned bit = 0; bit < 4; ++bit) {
      if ((mask >> bit & 1u) && !present[bit]) valid = false;
    }
    if (!valid) continue;
    SignFlip f;
    f.a = mask & 1u ? -1 : 1;
    f.b = mask & 2u ? -1 : 1;
    f.c = mask & 4u ? -1 : 1;
    f.l = mask & 8u ? -1 : 1;
    f.mirror_x = (mask & 16u) != 0;
    f.mirror_y = (mask & 32u) != 0;
    if (flip_matches(src, dst, f, samples)) return f;
  }
  return std::nullopt;
}

std::vector<CollapseResult> collapse_experiment() {
  std::vector<CollapseResult> out;
  for (const FamilyInfo& info : families()) {
    for (SpeciesId src : info.members) {
      for (SpeciesId dst : info.members) {
        if (src == dst) continue;
        out.push_back({src, dst, info.id, find_collapse(src, dst)});
      }
    }
  }
  return out;
}

std::string collapse_report(const std::vector<CollapseResult>& results) {
  std::string out = "# family  src -> dst  flip\n";
  for (const CollapseResult& r : results) {
    out += std::string(to_string(r.family)) + "  " + std::string(to_string(r.src)) + " -> " +
           std::string(to_string(r.dst)) + "  " + (r.flip ? to_string(*r.flip) : "NotFound") + "\n";
  }
  return out;
}

}  // namespace khayyam
