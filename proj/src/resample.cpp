#include "limitset/resample.hpp"

#include <algorithm>
#include <cmath>

#include "limitset/errors.hpp"
#include "limitset/limitset_smooth.hpp"
#include "limitset/margins.hpp"

namespace limitset {

std::size_t geometric_block_length(Rng& rng, double mean) {
    if (!(mean >= 1.0)) throw validation_error("mean block length must be at least 1");
    if (mean == 1.0) return 1;
    // geometric on {1, 2, ...} with success probability 1/mean
    const double log_q = std::log1p(-1.0 / mean);
    const double draw = std::floor(std::log(rng.uniform()) / log_q);
    // the draw is finite and nonnegative; cap it to keep the cast safe
    return 1 + static_cast<std::size_t>(std::min(draw, 1e15));
}

std::vector<std::size_t> stationary_bootstrap_indices(const BootstrapPlan& plan,
                                                      std::size_t b) {
    if (plan.n == 0) throw validation_error("empty resampling target");
    if (!(plan.block_mean >= 1.0))
        throw validation_error("mean block length must be at least 1");
    Rng rng(derive_seed(plan.seed, b));
    std::vector<std::size_t> idx;
    idx.reserve(plan.n);
    while (idx.size() < plan.n) {
        std::size_t start = static_cast<std::size_t>(rng.uniform() *
                                                     static_cast<double>(plan.n));
        if (start >= plan.n) start = plan.n - 1; // guard the open-interval edge
        std::size_t len = geometric_block_length(rng, plan.block_mean);
        len = std::min(len, plan.n - idx.size());
        for (std::size_t j = 0; j < len; ++j)
            idx.push_back((start + j) % plan.n);
    }
    return idx;
}

namespace {

double percentile(std::vector<double> values, double p) {
    return empirical_quantile(values, p);
}

// Pointwise percentile of a tau curve across replicates. A grid point is
// reported when at least half the successful replicates could estimate it.
TauCurve tau_percentile(const std::vector<DependenceSummary>& reps, bool second,
                        double p) {
    TauCurve out;
    if (reps.empty()) return out;
    const TauCurve& first = second ? reps.front().tau2 : reps.front().tau1;
    for (std::size_t i = 0; i < first.delta.size(); ++i) {
        std::vector<double> vals;
        for (const DependenceSummary& s : reps) {
            const TauCurve& t = second ? s.tau2 : s.tau1;
            if (t.estimable[i]) vals.push_back(t.value[i]);
        }
        out.delta.push_back(first.delta[i]);
        if (2 * vals.size() >= reps.size() && !vals.empty()) {
            out.value.push_back(percentile(std::move(vals), p));
            out.estimable.push_back(true);
        } else {
            out.value.push_back(0.0);
            out.estimable.push_back(false);
        }
    }
    return out;
}

DependenceSummary summary_percentile(const std::vector<DependenceSummary>& reps,
                                     double p) {
    DependenceSummary out;
    if (reps.empty()) return out;
    std::vector<double> vals;
    vals.reserve(reps.size());
    auto collect = [&](auto field) {
        vals.clear();
        for (const DependenceSummary& s : reps) vals.push_back(field(s));
        return percentile(vals, p);
    };
    out.eta = collect([](const DependenceSummary& s) { return s.eta; });
    out.alpha1 = collect([](const DependenceSummary& s) { return s.alpha1; });
    out.alpha2 = collect([](const DependenceSummary& s) { return s.alpha2; });
    out.omega_grid = reps.front().omega_grid;
    for (std::size_t i = 0; i < out.omega_grid.size(); ++i)
        out.lambda.push_back(collect(
            [i](const DependenceSummary& s) { return s.lambda[i]; }));
    out.tau1 = tau_percentile(reps, false, p);
    out.tau2 = tau_percentile(reps, true, p);
    return out;
}

} // namespace

BootstrapResult bootstrap_measures(const RawSample& raw, const PipelineConfig& config,
                                   const SummaryConfig& summary_config,
                                   const BootstrapPlan& plan) {
    if (plan.n != raw.size())
        throw validation_error("plan length does not match the sample");
    if (plan.replicates == 0) throw validation_error("need at least one replicate");

    BootstrapResult out;
    for (std::size_t b = 0; b < plan.replicates; ++b) {
        const std::vector<std::size_t> idx = stationary_bootstrap_indices(plan, b);
        RawSample res;
        res.y1.reserve(idx.size());
        res.y2.reserve(idx.size());
        for (std::size_t i : idx) {
            res.y1.push_back(raw.y1[i]);
            res.y2.push_back(raw.y2[i]);
        }
        try {
            const BivariateSample sample = to_exponential_margins(res);
            const FitResult fit = estimate(sample, config);
            out.replicates.push_back(
                summarize(sample, fit.g_hat.points, summary_config));
            if (plan.keep_boundaries) out.boundaries.push_back(fit.g_hat.points);
        } catch (const std::runtime_error&) {
            ++out.failures;
        }
    }
    if (out.replicates.empty())
        throw numerical_error("every bootstrap replicate failed");
    out.lower = summary_percentile(out.replicates, 0.025);
    out.upper = summary_percentile(out.replicates, 0.975);
    return out;
}

} // namespace limitset
