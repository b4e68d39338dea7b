#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "limitset/copulas.hpp"
#include "limitset/measures.hpp"
#include "limitset/types.hpp"

namespace limitset {

// Replication study over a list of copula cases. Per-replicate seeds are
// derived from (seed, case, replicate), so results do not depend on the
// worker count or scheduling order.
struct StudyConfig {
    std::vector<CopulaSpec> cases;
    std::size_t replicates = 100;
    std::size_t n = 10000;
    PipelineConfig pipeline;
    std::vector<double> omega_grid;   // defaults to 0.01..0.99 when empty
    std::vector<double> delta_grid;   // defaults to 0.01..1.00 when empty
    double beta_threshold_q = 0.9;
    std::uint64_t seed = 0;
    int threads = 1;
    bool with_baselines = true;       // rank-based eta and tau baselines
};

// Everything recorded about one replicate of one case.
struct StudyRecord {
    std::size_t case_index = 0;
    std::size_t replicate = 0;
    bool failed = false;
    std::string error;

    int degree = 0;
    double eta_g = 0;
    double eta_h = 0;
    std::optional<double> eta_p;
    std::optional<double> eta_d;
    double alpha1 = 0;
    double alpha2 = 0;
    std::optional<double> beta1;
    std::optional<double> beta2;
    std::vector<double> lambda;       // boundary based, on the omega grid
    TauCurve tau_g1;
    TauCurve tau_h1;
    bool tau_g1_monotone = false;
    bool tau_h1_monotone = false;
    std::vector<std::string> violations;   // self-consistency failures
};

// Bias and root mean squared error of one scalar estimator against its
// closed-form target, over the successful replicates.
struct ScalarScore {
    double truth = 0;
    double bias = 0;
    double rmse = 0;
    std::size_t count = 0;
};

struct CaseAggregate {
    std::size_t case_index = 0;
    std::string label;
    std::size_t failures = 0;
    std::array<std::size_t, 3> degree_counts{{0, 0, 0}};
    ScalarScore eta_g;
    ScalarScore eta_h;
    ScalarScore eta_p;
    ScalarScore eta_d;
    ScalarScore alpha1;
    double tau_g1_monotone_rate = 0;
    double tau_h1_monotone_rate = 0;
    std::size_t violation_count = 0;  // replicates with any violation
};

struct StudyResult {
    StudyConfig config;
    std::vector<StudyRecord> records;      // case-major, replicate-minor
    std::vector<CaseAggregate> aggregates; // one per case
};

// Nondecreasing over the estimable range (gaps allowed between runs).
bool tau_is_monotone(const TauCurve& curve);

// The self-consistency requirements every fitted boundary must satisfy.
// Returns human-readable violation messages; empty means consistent. The
// omega grid must contain the value 0.5 exactly.
std::vector<std::string> consistency_violations(const DependenceSummary& summary,
                                                const BoundaryPoints& boundary);

StudyResult run_study(const StudyConfig& config);

} // namespace limitset
