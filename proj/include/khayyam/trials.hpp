#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "khayyam/core.hpp"
#include "khayyam/solver.hpp"

namespace khayyam {

/// Deterministic per-instance seed (splitmix64 of seed, species and index).
std::uint64_t instance_seed(std::uint64_t seed, SpeciesId id, std::uint64_t index);

/// Parameters drawn uniformly from [lo, hi].
SpeciesInstance random_species(SpeciesId id, std::mt19937_64& rng, double lo = 0.25, double hi = 8.0);

/// Rational parameters n/d in [1/4, 8] with d in 1..16.
ExactSpecies random_exact_species(SpeciesId id, std::mt19937_64& rng);

/// Positive-root counts (with multiplicity) the sign pattern allows.
std::vector<std::size_t> allowed_positive_counts(SpeciesId id);

struct TrialOutcome {
  SpeciesInstance species;
  bool near_tangent = false;  ///< |relative discriminant| below the margin
  bool agreement = false;
  std::size_t count = 0;         ///< read-off roots, with multiplicity
  std::size_t oracle_count = 0;  ///< oracle positive roots, with multiplicity
  bool count_allowed = false;
  double max_hidden_residual = 0.0;
};

TrialOutcome run_trial(const SpeciesInstance& s, double tol = kDefaultTolerance,
                       double tangency_margin = 1e-6);

struct SpeciesSummary {
  SpeciesId id = SpeciesId::S1;
  std::size_t trials = 0;
  std::size_t near_tangent = 0;
  std::size_t agreed = 0;  ///< among instances away from tangency
  std::size_t count_violations = 0;
  double max_hidden_residual = 0.0;
};

/// per_species random instances of every species, seeded deterministically.
std::vector<SpeciesSummary> run_fuzz(std::size_t per_species, std::uint64_t seed,
                                     double tol = kDefaultTolerance);

}  // namespace khayyam
