#include "limitset/study.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "limitset/errors.hpp"
#include "limitset/limitset_smooth.hpp"
#include "limitset/rng.hpp"

namespace limitset {

bool tau_is_monotone(const TauCurve& curve) {
    double prev = -1;
    bool seen = false;
    for (std::size_t i = 0; i < curve.value.size(); ++i) {
        if (!curve.estimable[i]) continue;
        if (seen && curve.value[i] < prev) return false;
        prev = curve.value[i];
        seen = true;
    }
    return true;
}

std::vector<std::string> consistency_violations(const DependenceSummary& summary,
                                                const BoundaryPoints& boundary) {
    std::vector<std::string> out;
    const double eta = summary.eta;
    if (!(eta >= summary.alpha1 && eta >= summary.alpha2))
        out.push_back("eta below a conditional slope");

    const bool eta_one = eta == 1.0;
    const bool a1_one = summary.alpha1 == 1.0;
    const bool a2_one = summary.alpha2 == 1.0;
    if (eta_one != a1_one || eta_one != a2_one)
        out.push_back("dependence corner not shared by eta and the slopes");

    const auto centre = std::find(summary.omega_grid.begin(),
                                  summary.omega_grid.end(), 0.5);
    if (centre == summary.omega_grid.end()) {
        out.push_back("omega grid misses 1/2");
    } else {
        const std::size_t i =
            static_cast<std::size_t>(centre - summary.omega_grid.begin());
        if (summary.lambda[i] != 1.0 / (2.0 * eta))
            out.push_back("lambda at 1/2 is not the reciprocal of twice eta");
    }

    double mx1 = 0, mx2 = 0;
    for (std::size_t j = 0; j < boundary.size(); ++j) {
        mx1 = std::max(mx1, boundary.x1[j]);
        mx2 = std::max(mx2, boundary.x2[j]);
    }
    if (mx1 != 1.0 || mx2 != 1.0) out.push_back("coordinate maxima are not one");

    // the boundary meets x1 = 1 at height alpha1, so every delta grid
    // point at or above alpha1 (short of 1) must push tau1 to 1
    bool delta_reachable = false;
    double sup_tau = 0;
    for (std::size_t i = 0; i < summary.tau1.delta.size(); ++i) {
        const double d = summary.tau1.delta[i];
        if (d >= summary.alpha1 && d < 1.0) delta_reachable = true;
        if (summary.tau1.estimable[i] && d < 1.0)
            sup_tau = std::max(sup_tau, summary.tau1.value[i]);
    }
    if (delta_reachable && std::max(eta, sup_tau) != 1.0)
        out.push_back("neither eta nor tau1 reaches one on the covered range");

    return out;
}

namespace {

std::vector<double> default_grid(double last) {
    std::vector<double> g;
    for (int i = 1; i <= 100; ++i) {
        const double v = i / 100.0;
        if (v <= last) g.push_back(v);
    }
    return g;
}

void score(ScalarScore& s, const std::vector<double>& values, double truth) {
    s.truth = truth;
    s.count = values.size();
    if (values.empty()) return;
    double sum = 0, sq = 0;
    for (double v : values) {
        sum += v - truth;
        sq += (v - truth) * (v - truth);
    }
    s.bias = sum / static_cast<double>(values.size());
    s.rmse = std::sqrt(sq / static_cast<double>(values.size()));
}

StudyRecord run_replicate(const StudyConfig& config, std::size_t case_index,
                          std::size_t r, const SummaryConfig& sum_cfg) {
    StudyRecord rec;
    rec.case_index = case_index;
    rec.replicate = r;
    const CopulaSpec& spec = config.cases[case_index];
    const std::uint64_t seed = derive_seed(derive_seed(config.seed, case_index), r);
    try {
        const BivariateSample sample = sample_copula(spec, config.n, seed);
        const FitResult fit = estimate(sample, config.pipeline);
        const DependenceSummary summary =
            summarize(sample, fit.g_hat.points, sum_cfg);

        rec.degree = fit.degree;
        rec.eta_g = summary.eta;
        rec.eta_h = fit.eta_h;
        rec.alpha1 = summary.alpha1;
        rec.alpha2 = summary.alpha2;
        if (summary.beta1) rec.beta1 = summary.beta1->beta;
        if (summary.beta2) rec.beta2 = summary.beta2->beta;
        rec.lambda = summary.lambda;
        rec.tau_g1 = summary.tau1;
        rec.tau_g1_monotone = tau_is_monotone(rec.tau_g1);
        rec.violations = consistency_violations(summary, fit.g_hat.points);

        if (config.with_baselines) {
            rec.eta_p = peng_eta(sample);
            rec.eta_d = draisma_eta(sample);
            rec.tau_h1 = hill_tau(sample, sum_cfg.delta_grid, 1);
            rec.tau_h1_monotone = tau_is_monotone(rec.tau_h1);
        }
    } catch (const std::runtime_error& e) {
        rec.failed = true;
        rec.error = e.what();
    }
    return rec;
}

} // namespace

StudyResult run_study(const StudyConfig& config) {
    if (config.cases.empty()) throw validation_error("no copula cases");
    for (const CopulaSpec& spec : config.cases) spec.validate();
    if (config.threads < 1) throw validation_error("worker count must be positive");

    StudyResult result;
    result.config = config;
    if (result.config.omega_grid.empty())
        result.config.omega_grid = default_grid(0.99);
    if (result.config.delta_grid.empty())
        result.config.delta_grid = default_grid(1.0);
    // the consistency checks pivot on lambda at the diagonal angle
    if (std::find(result.config.omega_grid.begin(), result.config.omega_grid.end(),
                  0.5) == result.config.omega_grid.end())
        throw validation_error("omega grid must contain 0.5");

    SummaryConfig sum_cfg;
    sum_cfg.omega_grid = result.config.omega_grid;
    sum_cfg.delta_grid = result.config.delta_grid;
    sum_cfg.beta_threshold_q = config.beta_threshold_q;

    const std::size_t total = config.cases.size() * config.replicates;
    result.records.resize(total);

    // work queue over (case, replicate) pairs; records land in fixed
    // slots, so the output is identical for any worker count
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= total) return;
            const std::size_t case_index = job / config.replicates;
            const std::size_t r = job % config.replicates;
            result.records[job] =
                run_replicate(result.config, case_index, r, sum_cfg);
        }
    };
    if (config.threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (std::size_t c = 0; c < config.cases.size(); ++c) {
        CaseAggregate agg;
        agg.case_index = c;
        agg.label = config.cases[c].name();

        const DependenceSummary truth = true_measures(
            config.cases[c], result.config.omega_grid, result.config.delta_grid);

        std::vector<double> eta_g, eta_h, eta_p, eta_d, alpha1;
        std::size_t ok = 0, mono_g = 0, mono_h = 0, with_h = 0;
        for (std::size_t r = 0; r < config.replicates; ++r) {
            const StudyRecord& rec = result.records[c * config.replicates + r];
            if (rec.failed) {
                ++agg.failures;
                continue;
            }
            ++ok;
            if (rec.degree >= 1 && rec.degree <= 3)
                ++agg.degree_counts[static_cast<std::size_t>(rec.degree - 1)];
            eta_g.push_back(rec.eta_g);
            eta_h.push_back(rec.eta_h);
            if (rec.eta_p) eta_p.push_back(*rec.eta_p);
            if (rec.eta_d) eta_d.push_back(*rec.eta_d);
            alpha1.push_back(rec.alpha1);
            if (rec.tau_g1_monotone) ++mono_g;
            if (!rec.tau_h1.delta.empty()) {
                ++with_h;
                if (rec.tau_h1_monotone) ++mono_h;
            }
            if (!rec.violations.empty()) ++agg.violation_count;
        }
        score(agg.eta_g, eta_g, truth.eta);
        score(agg.eta_h, eta_h, truth.eta);
        score(agg.eta_p, eta_p, truth.eta);
        score(agg.eta_d, eta_d, truth.eta);
        score(agg.alpha1, alpha1, truth.alpha1);
        agg.tau_g1_monotone_rate =
            ok ? static_cast<double>(mono_g) / static_cast<double>(ok) : 0.0;
        agg.tau_h1_monotone_rate =
            with_h ? static_cast<double>(mono_h) / static_cast<double>(with_h) : 0.0;
        result.aggregates.push_back(agg);
    }
    return result;
}

} // namespace limitset
