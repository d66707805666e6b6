#include "khayyam/trials.hpp"

#include <algorithm>

#include "khayyam/classifier.hpp"
#include "khayyam/oracle.hpp"

namespace khayyam {

std::uint64_t instance_seed(std::uint64_t seed, SpeciesId id, std::uint64_t index) {
  std::uint64_t z = seed ^ (static_cast<std::uint64_t>(number_of(id)) << 40) ^ index;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SpeciesInstance random_species(SpeciesId id, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  const ParamUse use = params_of(id);
  SpeciesInstance s;
  s.id = id;
  if (use.a) s.a = dist(rng);
  if (use.b) s.b = dist(rng);
  if (use.c) s.c = dist(rng);
  if (use.l) s.l = dist(rng);
  validate(s);
  return s;
}

ExactSpecies random_exact_species(SpeciesId id, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den_dist(1, 16);
  auto draw = [&] {
    const long d = den_dist(rng);
    std::uniform_int_distribution<long> num_dist((d + 3) / 4, 8 * d);
    Rational q(num_dist(rng), d);
    q.canonicalize();
    return q;
  };
  const ParamUse use = params_of(id);
  ExactSpecies s;
  s.id = id;
  if (use.a) s.a = draw();
  if (use.b) s.b = draw();
  if (use.c) s.c = draw();
  if (use.l) s.l = draw();
  validate(s);
  return s;
}

std::vector<std::size_t> allowed_positive_counts(SpeciesId id) {
  switch (id) {
    case SpeciesId::S2:
    case SpeciesId::S5:
    case SpeciesId::S8:
    case SpeciesId::S9:
    case SpeciesId::S13:
      return {0, 2};
    case SpeciesId::S12:
      return {1, 3};
    default:
      return {1};
  }
}

TrialOutcome run_trial(const SpeciesInstance& s, double tol, double tangency_margin) {
  TrialOutcome out;
  out.species = s;
  const SolveReport report = solve_species(s, tol);
  out.near_tangent = std::abs(relative_discriminant(report.cubic)) < tangency_margin;
  out.agreement = report.agreement;
  out.count = root_count(report.roots);
  out.oracle_count = root_count(report.oracle_roots);
  const auto allowed = allowed_positive_counts(s.id);
  out.count_allowed = std::find(allowed.begin(), allowed.end(), out.count) != allowed.end();
  for (const AcceptedRoot& r : report.roots) {
    out.max_hidden_residual = std::max(out.max_hidden_residual, r.hidden_residual);
  }
  return out;
}

std::vector<SpeciesSummary> run_fuzz(std::size_t per_species, std::uint64_t seed, double tol) {
  std::vector<SpeciesSummary> out;
  for (SpeciesId id : kAllSpecies) {
    SpeciesSummary sum;
    sum.id = id;
    for (std::size_t i = 0; i < per_species; ++i) {
      std::mt19937_64 rng(instance_seed(seed, id, i));
      const TrialOutcome t = run_trial(random_species(id, rng), tol);
      ++sum.trials;
      if (t.near_tangent) {
        ++sum.near_tangent;
      } else if (t.agreement) {
        ++sum.agreed;
      }
      if (!t.count_allowed) ++sum.count_violations;
      sum.max_hidden_residual = std::max(sum.max_hidden_residual, t.max_hidden_residual);
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace khayyam
