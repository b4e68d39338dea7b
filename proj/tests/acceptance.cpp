// End-to-end acceptance checks. Each numbered criterion prints exactly
// one PASS or FAIL line with the measured quantities, and the process
// exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "limitset/copulas.hpp"
#include "limitset/gpd.hpp"
#include "limitset/limitset_local.hpp"
#include "limitset/measures.hpp"
#include "limitset/resample.hpp"
#include "limitset/rng.hpp"
#include "limitset/splines.hpp"
#include "limitset/study.hpp"

using namespace limitset;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& detail) {
    std::printf("criterion %d %s %s\n", idx, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---- criterion 1: discretised true boundaries against closed forms ----

struct OracleCase {
    CopulaSpec spec;
    std::vector<double> lambda_switches;   // angles where lambda changes branch
};

void criterion_oracles() {
    const auto start = std::chrono::steady_clock::now();

    std::vector<OracleCase> cases;
    for (double rho : {0.25, 0.5, 0.75})
        cases.push_back({CopulaSpec::gaussian(rho),
                         {rho * rho / (1 + rho * rho), 1 / (1 + rho * rho)}});
    for (double gamma : {0.25, 0.5, 0.75})
        cases.push_back({CopulaSpec::logistic(gamma), {0.5}});
    for (double gamma : {0.25, 0.5, 0.75})
        cases.push_back({CopulaSpec::inverted_logistic(gamma), {}});
    cases.push_back({CopulaSpec::asymmetric_logistic(0.5, 0.5, 0.5), {0.5}});

    std::vector<double> grid;   // 99 points for both omega and delta
    for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);

    bool ok = true;
    double worst_eta = 0, worst_alpha = 0, worst_tau = 0;
    double worst_lambda = 0, worst_lambda_near = 0;
    for (const OracleCase& oc : cases) {
        const BoundaryPoints b = true_boundary(oc.spec, 10000);
        const DependenceSummary truth = true_measures(oc.spec, grid, grid);

        const double eta_err = std::abs(eta_from_boundary(b) - truth.eta);
        worst_eta = std::max(worst_eta, eta_err);
        ok = ok && eta_err <= 1e-3;

        double a1 = 0, a2 = 0;
        alpha_from_boundary(b, a1, a2);
        const double alpha_err = std::abs(a1 - truth.alpha1);
        worst_alpha = std::max(worst_alpha, alpha_err);
        ok = ok && alpha_err <= 1e-3;

        const std::vector<double> lam = lambda_from_boundary(b, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double err = std::abs(lam[i] - truth.lambda[i]);
            bool near = false;
            for (double s : oc.lambda_switches) near = near || std::abs(grid[i] - s) <= 0.015;
            if (near) {
                worst_lambda_near = std::max(worst_lambda_near, err);
                ok = ok && err <= 1e-2;
            } else {
                worst_lambda = std::max(worst_lambda, err);
                ok = ok && err <= 1e-3;
            }
        }

        const TauCurve tau = tau_from_boundary(b, grid, 1);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ok = ok && tau.estimable[i];
            const double err = std::abs(tau.value[i] - truth.tau1.value[i]);
            worst_tau = std::max(worst_tau, err);
            ok = ok && err <= 1e-3;
        }
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < 10.0;
    report(1, ok,
           "boundary oracles at 1e4 angles: max errors eta " + num(worst_eta) +
               ", lambda " + num(worst_lambda) + " (" + num(worst_lambda_near) +
               " near switches), tau1 " + num(worst_tau) + ", alpha1 " +
               num(worst_alpha) + "; " + num(secs) + " s (limit 10)");
}

// ---- criteria 2-6: one replication study, 100 fits per case ----

void criteria_study() {
    StudyConfig cfg;
    cfg.cases = {CopulaSpec::logistic(0.75), CopulaSpec::inverted_logistic(0.5),
                 CopulaSpec::logistic(0.5), CopulaSpec::gaussian(0.5)};
    cfg.replicates = 100;
    cfg.n = 10000;
    cfg.seed = 20240801;
    const StudyResult res = run_study(cfg);

    std::size_t total_failures = 0;
    for (const CaseAggregate& a : res.aggregates) total_failures += a.failures;

    {
        const CaseAggregate& a = res.aggregates[0];
        const bool ok = a.failures == 0 && a.eta_g.rmse <= 0.07 &&
                        a.eta_g.rmse < a.eta_h.rmse;
        report(2, ok,
               "logistic 0.75, n=10000, 100 replicates: rmse(eta_G) " +
                   num(a.eta_g.rmse) + " (limit 0.07), rmse(eta_H) " +
                   num(a.eta_h.rmse) + ", failures " + std::to_string(a.failures));
    }
    {
        const CaseAggregate& a = res.aggregates[1];
        const bool ok = a.failures == 0 && std::abs(a.eta_g.bias) <= 0.03;
        report(3, ok,
               "inverted logistic 0.5: |mean eta_G - 2^-1/2| " +
                   num(std::abs(a.eta_g.bias)) + " (limit 0.03), failures " +
                   std::to_string(a.failures));
    }
    {
        const CaseAggregate& lg = res.aggregates[2];
        const CaseAggregate& ga = res.aggregates[3];
        const std::size_t nonlinear = ga.degree_counts[1] + ga.degree_counts[2];
        const bool ok = lg.failures == 0 && ga.failures == 0 &&
                        lg.degree_counts[0] >= 60 && nonlinear >= 45;
        report(4, ok,
               "degree selection: logistic 0.5 linear " +
                   std::to_string(lg.degree_counts[0]) +
                   "/100 (need 60), gaussian 0.5 nonlinear " +
                   std::to_string(nonlinear) + "/100 (need 45)");
    }
    {
        const CaseAggregate& a = res.aggregates[2];
        const bool ok = a.failures == 0 && a.tau_g1_monotone_rate == 1.0 &&
                        a.tau_h1_monotone_rate < 0.5;
        report(5, ok,
               "tau1 monotone on 0.01-step grid: boundary rate " +
                   num(a.tau_g1_monotone_rate) + " (need 1), baseline rate " +
                   num(a.tau_h1_monotone_rate) + " (need <0.5)");
    }
    {
        std::size_t violations = 0;
        for (const CaseAggregate& a : res.aggregates) violations += a.violation_count;
        const std::size_t fitted = res.records.size() - total_failures;
        report(6, violations == 0,
               "self-consistency on every fit: " + std::to_string(violations) +
                   " of " + std::to_string(fitted) +
                   " fits violate (eta>=alpha, corner equivalence, "
                   "lambda(1/2)=1/(2 eta), unit maxima, tau range)");
    }
}

// ---- criterion 7: the scaling map traces, compared bit for bit ----

BoundaryPoints raw_boundary(std::vector<double> x1, std::vector<double> x2) {
    BoundaryPoints b;
    b.x1 = std::move(x1);
    b.x2 = std::move(x2);
    b.w.resize(b.x1.size(), 0.5);
    return b;
}

void criterion_traces() {
    bool ok = true;

    {
        const LimitSetEstimate est =
            scale_truncate(raw_boundary({2.0, 1.5, 0.5}, {0.5, 1.5, 2.0}), 0.75);
        const double f = 0.75 / 1.5;
        ok = ok && est.scale_factor == f;
        ok = ok && est.points.x1[0] == std::min(1.0, 2.0 * f);
        ok = ok && est.points.x1[1] == std::min(1.0, 1.5 * f);
        ok = ok && est.points.x1[2] == std::min(1.0, 0.5 * f);
        ok = ok && est.points.x2[0] == std::min(1.0, 0.5 * f);
        ok = ok && est.points.x2[2] == std::min(1.0, 2.0 * f);
        ok = ok && est.points.x1[0] == 1.0 && est.points.x2[2] == 1.0;
        ok = ok && eta_from_boundary(est.points) == 0.75;
    }
    {
        const BoundaryPoints tilde = raw_boundary({1.0, 0.75, 0.25}, {0.25, 0.75, 1.0});
        const LimitSetEstimate est = scale_truncate(tilde, 0.75);
        ok = ok && est.scale_factor == 1.0;
        ok = ok && est.points.x1 == tilde.x1 && est.points.x2 == tilde.x2;
    }
    {
        const LimitSetEstimate est =
            scale_truncate(raw_boundary({3.0, 2.4, 0.3}, {0.3, 2.4, 3.0}), 0.5);
        const double f = 0.5 / 2.4;
        const double mx = 3.0 * f;
        ok = ok && est.scale_factor == f;
        ok = ok && est.points.x1[0] == (3.0 * f) / mx;
        ok = ok && est.points.x1[1] == (2.4 * f) / mx;
        ok = ok && est.points.x1[2] == (0.3 * f) / mx;
        ok = ok && est.points.x2[0] == (0.3 * f) / mx;
        ok = ok && est.points.x2[1] == (2.4 * f) / mx;
        ok = ok && est.points.x2[2] == (3.0 * f) / mx;
        ok = ok && est.points.x1[0] == 1.0 && est.points.x2[2] == 1.0;
        ok = ok && eta_from_boundary(est.points) == (2.4 * f) / mx;
    }

    report(7, ok, "three scale-and-truncate traces reproduce bit for bit");
}

// ---- criterion 8: tail-fit and spline micro oracles ----

void criterion_micro() {
    bool ok = true;
    std::string detail;

    {
        Rng rng(99);
        std::vector<double> excesses;
        for (int i = 0; i < 100000; ++i) excesses.push_back(rng.exponential());
        const GpdFit fit = fit_gpd_mle(excesses, 0.0, 1.0);
        ok = ok && std::abs(fit.xi) <= 0.02;
        detail += "xi at 1e5 exponential excesses " + num(fit.xi) + " (limit 0.02)";
    }
    {
        Rng rng(4);
        PolarSample p;
        for (int i = 0; i < 20000; ++i) {
            const double w = 0.02 + 0.96 * rng.uniform();
            p.w.push_back(w);
            p.r.push_back(std::exp(1.0 + 2.0 * w + 0.5 * rng.normal()));
        }
        const SplineBasis basis = build_basis(2, 7, 0.02, 0.98);
        const ThresholdCurve curve = fit_threshold_quantile(p, basis, 0.5);
        std::size_t below = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.r[i] <= curve.threshold_at(p.w[i])) ++below;
        const double cover = static_cast<double>(below) / static_cast<double>(p.size());
        const double dev = std::abs(cover - 0.5);
        const double three_se = 3.0 * std::sqrt(0.25 / 20000.0);
        ok = ok && dev <= three_se;
        detail += "; median-curve coverage deviation " + num(dev) + " (3 SE " +
                  num(three_se) + ")";
    }
    {
        double worst = 0;
        for (int d : {1, 2, 3}) {
            const SplineBasis basis = build_basis(d, 7, 0.08, 0.93);
            for (int i = 0; i <= 1000; ++i) {
                const std::vector<double> v = basis.eval(i / 1000.0);
                worst = std::max(worst,
                                 std::abs(std::accumulate(v.begin(), v.end(), 0.0) - 1.0));
            }
        }
        ok = ok && worst <= 1e-12;
        detail += "; partition-of-unity error " + num(worst) + " (limit 1e-12)";
    }

    report(8, ok, detail);
}

// ---- criterion 9: bootstrap block lengths and determinism ----

void criterion_bootstrap() {
    bool ok = true;

    Rng rng(123);
    double total = 0;
    for (int i = 0; i < 10000; ++i)
        total += static_cast<double>(geometric_block_length(rng, 16.0));
    const double mean = total / 10000.0;
    ok = ok && mean >= 15.5 && mean <= 16.5;

    BootstrapPlan plan;
    plan.n = 800;
    plan.block_mean = 16;
    plan.replicates = 10;
    plan.seed = 42;
    for (std::size_t b : {std::size_t{0}, std::size_t{7}})
        ok = ok && stationary_bootstrap_indices(plan, b) ==
                       stationary_bootstrap_indices(plan, b);
    BootstrapPlan other = plan;
    other.seed = 43;
    ok = ok && stationary_bootstrap_indices(plan, 0) !=
                   stationary_bootstrap_indices(other, 0);

    report(9, ok,
           "mean block length over 1e4 draws " + num(mean) +
               " (need 16 +- 0.5); resampling indices replicate under fixed seeds");
}

} // namespace

int main() {
    criterion_oracles();
    criteria_study();
    criterion_traces();
    criterion_micro();
    criterion_bootstrap();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
