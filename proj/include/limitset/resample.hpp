#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "limitset/measures.hpp"
#include "limitset/rng.hpp"
#include "limitset/types.hpp"

namespace limitset {

// Stationary bootstrap: blocks of geometric length (mean block_mean)
// starting at uniform positions, wrapping circularly, concatenated until
// n indices are drawn. Preserves serial dependence in expectation.
struct BootstrapPlan {
    std::size_t n = 0;
    double block_mean = 16;
    std::size_t replicates = 100;
    std::uint64_t seed = 0;
    bool keep_boundaries = false;   // retain each refit boundary
};

// One geometric block length with the given mean (at least 1). Exposed so
// the realized mean can be checked directly.
std::size_t geometric_block_length(Rng& rng, double mean);

// The resampling indices of replicate b, each in [0, n). Fully determined
// by (plan.seed, b) regardless of how replicates are scheduled.
std::vector<std::size_t> stationary_bootstrap_indices(const BootstrapPlan& plan,
                                                      std::size_t b);

// Per-replicate dependence summaries from refitting the entire pipeline
// (rank transform included) on resampled rows, plus pointwise percentile
// envelopes. Failed replicates are counted and excluded.
struct BootstrapResult {
    std::vector<DependenceSummary> replicates;
    std::vector<BoundaryPoints> boundaries;   // successful refits, when kept
    std::size_t failures = 0;
    DependenceSummary lower;   // pointwise 2.5% percentile
    DependenceSummary upper;   // pointwise 97.5% percentile
};

BootstrapResult bootstrap_measures(const RawSample& raw, const PipelineConfig& config,
                                   const SummaryConfig& summary_config,
                                   const BootstrapPlan& plan);

} // namespace limitset
