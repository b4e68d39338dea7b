#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "limitset/copulas.hpp"
#include "limitset/errors.hpp"
#include "limitset/measures.hpp"
#include "limitset/rng.hpp"

using namespace limitset;

namespace {

BoundaryPoints three_point_boundary() {
    BoundaryPoints b;
    b.w = {0.8, 0.5, 0.2};
    b.x1 = {1.0, 0.75, 0.25};
    b.x2 = {0.25, 0.75, 1.0};
    return b;
}

std::vector<double> grid(double lo, double hi, int cells) {
    std::vector<double> g;
    for (int i = 0; i <= cells; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / cells);
    return g;
}

} // namespace

TEST_CASE("eta of the three point boundary") {
    CHECK(eta_from_boundary(three_point_boundary()) == doctest::Approx(0.75));
}

TEST_CASE("eta is one when the corner is present") {
    BoundaryPoints b;
    b.w = {0.5, 0.9};
    b.x1 = {1.0, 1.0};
    b.x2 = {1.0, 0.1};
    CHECK(eta_from_boundary(b) == 1.0);
}

TEST_CASE("eta matches the gaussian closed form on a fine true boundary") {
    const CopulaSpec spec = CopulaSpec::gaussian(0.5);
    const BoundaryPoints b = true_boundary(spec, 10001);
    CHECK(eta_from_boundary(b) == doctest::Approx(0.75).epsilon(1e-3));
}

TEST_CASE("lambda at one half is the reciprocal of twice eta") {
    const BoundaryPoints b = three_point_boundary();
    const std::vector<double> lam = lambda_from_boundary(b, {0.5});
    const double eta = eta_from_boundary(b);
    CHECK(lam[0] == 1.0 / (2.0 * eta));
}

TEST_CASE("lambda follows the max envelope on the logistic true boundary") {
    const CopulaSpec spec = CopulaSpec::logistic(0.5);
    const BoundaryPoints b = true_boundary(spec, 10001);
    for (double w : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double lam = lambda_from_boundary(b, {w})[0];
        CHECK(lam == doctest::Approx(std::max(w, 1.0 - w)).epsilon(1e-3));
    }
}

TEST_CASE("lambda endpoints are one by convention") {
    const std::vector<double> lam = lambda_from_boundary(three_point_boundary(), {0.0, 1.0});
    CHECK(lam[0] == 1.0);
    CHECK(lam[1] == 1.0);
}

TEST_CASE("lambda is clamped into its geometric range") {
    BoundaryPoints b; // coarse two point boundary far from the diagonal
    b.w = {0.9, 0.1};
    b.x1 = {1.0, 0.2};
    b.x2 = {0.2, 1.0};
    const std::vector<double> omegas = grid(0.05, 0.95, 18);
    const std::vector<double> lam = lambda_from_boundary(b, omegas);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        CHECK(lam[i] <= 1.0);
        CHECK(lam[i] >= std::max(omegas[i], 1.0 - omegas[i]));
    }
    // raw reciprocal at the centre is 1 / 0.4 = 2.5, capped at 1
    CHECK(lambda_from_boundary(b, {0.5})[0] == 1.0);
}

TEST_CASE("tau on the logistic true boundary matches the closed form") {
    const double gamma = 0.5;
    const CopulaSpec spec = CopulaSpec::logistic(gamma);
    const BoundaryPoints b = true_boundary(spec, 10001);
    const TauCurve t = tau_from_boundary(b, {0.25, 0.5, 0.75}, 1);
    for (std::size_t i = 0; i < t.delta.size(); ++i) {
        REQUIRE(t.estimable[i]);
        const double d = t.delta[i];
        const double want = gamma / (1.0 + gamma * d - d);
        CHECK(t.value[i] == doctest::Approx(want).epsilon(2e-3));
    }
    // delta = 0.5 in closed form: 0.5 / 0.75 = 2/3
    CHECK(t.value[1] == doctest::Approx(2.0 / 3.0).epsilon(2e-3));
}

TEST_CASE("tau is not estimable when no point satisfies the cap") {
    BoundaryPoints b;
    b.w = {0.5};
    b.x1 = {1.0};
    b.x2 = {1.0};
    const TauCurve t = tau_from_boundary(b, {0.5, 1.0}, 1);
    CHECK_FALSE(t.estimable[0]);
    CHECK(t.estimable[1]);
    CHECK(t.value[1] == 1.0);
}

TEST_CASE("tau margins mirror under coordinate swap") {
    const BoundaryPoints b = three_point_boundary();
    BoundaryPoints swapped = b;
    std::swap(swapped.x1, swapped.x2);
    const std::vector<double> deltas = grid(0.05, 1.0, 19);
    const TauCurve t1 = tau_from_boundary(b, deltas, 1);
    const TauCurve t2 = tau_from_boundary(swapped, deltas, 2);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        CHECK(t1.estimable[i] == t2.estimable[i]);
        if (t1.estimable[i]) CHECK(t1.value[i] == t2.value[i]);
    }
}

TEST_CASE("alpha of the three point boundary") {
    double a1 = -1, a2 = -1;
    alpha_from_boundary(three_point_boundary(), a1, a2);
    CHECK(a1 == doctest::Approx(0.25));
    CHECK(a2 == doctest::Approx(0.25));
}

TEST_CASE("alpha matches rho squared on the gaussian true boundary") {
    const CopulaSpec spec = CopulaSpec::gaussian(0.75);
    const BoundaryPoints b = true_boundary(spec, 10001);
    double a1 = 0, a2 = 0;
    alpha_from_boundary(b, a1, a2);
    CHECK(a1 == doctest::Approx(0.5625).epsilon(1e-3));
    CHECK(a2 == doctest::Approx(0.5625).epsilon(1e-3));
}

TEST_CASE("geometric measures ignore point order and duplicates") {
    BoundaryPoints b = three_point_boundary();
    BoundaryPoints shuffled;
    for (std::size_t j : {2u, 0u, 1u, 0u}) { // reordered with one duplicate
        shuffled.w.push_back(b.w[j]);
        shuffled.x1.push_back(b.x1[j]);
        shuffled.x2.push_back(b.x2[j]);
    }
    CHECK(eta_from_boundary(b) == eta_from_boundary(shuffled));
    const std::vector<double> omegas = grid(0.1, 0.9, 8);
    CHECK(lambda_from_boundary(b, omegas) == lambda_from_boundary(shuffled, omegas));
    double a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    alpha_from_boundary(b, a1, a2);
    alpha_from_boundary(shuffled, b1, b2);
    CHECK(a1 == b1);
    CHECK(a2 == b2);
}

TEST_CASE("beta fit recovers the spread exponent of a synthetic tail") {
    // conditional model with known alpha = 0.4, beta = 0.3
    Rng rng(2024);
    const std::size_t n = 20000;
    BivariateSample s;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.exponential();
        const double z = rng.normal();
        s.x1.push_back(x);
        s.x2.push_back(0.4 * x + std::pow(std::max(x, 1e-12), 0.3) * (0.5 + 0.2 * z));
    }
    const NormalTailFit fit = beta_fit(s, 0.4, 1, 0.9);
    CHECK(fit.beta == doctest::Approx(0.3).epsilon(0.35));
    CHECK(fit.mu == doctest::Approx(0.5).epsilon(0.3));
    CHECK(fit.sigma == doctest::Approx(0.2).epsilon(0.3));
}

TEST_CASE("beta fit rejects tiny samples") {
    BivariateSample s;
    for (int i = 0; i < 40; ++i) {
        s.x1.push_back(static_cast<double>(i + 1));
        s.x2.push_back(static_cast<double>(i + 1));
    }
    CHECK_THROWS_AS(beta_fit(s, 1.0, 1, 0.5), validation_error);
}

TEST_CASE("hill eta mean excess on a hand built sample") {
    // componentwise minima 0.1 (x5), then 0.2, 0.4, 0.6 as the top three;
    // threshold is the 5th largest minimum = 0.1, excesses 0.1, 0.3, 0.5
    BivariateSample s;
    for (double m : {0.1, 0.1, 0.1, 0.1, 0.1, 0.2, 0.4, 0.6}) {
        s.x1.push_back(m);
        s.x2.push_back(m + 1.0);
    }
    CHECK(hill_eta(s, 3) == doctest::Approx(0.3));
}

TEST_CASE("hill eta truncates at one") {
    BivariateSample s;
    for (double m : {0.1, 0.1, 3.0, 5.0, 7.0}) {
        s.x1.push_back(m);
        s.x2.push_back(m);
    }
    CHECK(hill_eta(s, 3) == 1.0);
}

TEST_CASE("joint exceedance counts against a direct double loop") {
    Rng rng(77);
    BivariateSample s;
    for (int i = 0; i < 400; ++i) {
        s.x1.push_back(rng.exponential());
        s.x2.push_back(rng.exponential());
    }
    const std::size_t j_max = 60;
    const std::vector<std::size_t> got = joint_exceedance_counts(s, j_max);
    std::vector<double> t1 = s.x1, t2 = s.x2;
    std::sort(t1.rbegin(), t1.rend());
    std::sort(t2.rbegin(), t2.rend());
    for (std::size_t j = 0; j < j_max; ++j) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s.x1[i] >= t1[j] && s.x2[i] >= t2[j]) ++count;
        REQUIRE(got[j] == count);
    }
}

TEST_CASE("ratio eta estimator on comonotone data is one") {
    BivariateSample s;
    for (int i = 0; i < 2000; ++i) {
        const double v = static_cast<double>(i) / 100.0;
        s.x1.push_back(v);
        s.x2.push_back(v);
    }
    // comonotone: s(j) = j for every j, so log 2 / log 2 = 1 up to rounding
    const auto eta = peng_eta(s, 500);
    REQUIRE(eta.has_value());
    CHECK(*eta == doctest::Approx(1.0));
}

TEST_CASE("sum ratio eta estimator on comonotone data truncates to one") {
    BivariateSample s;
    for (int i = 0; i < 2000; ++i) {
        const double v = static_cast<double>(i) / 100.0;
        s.x1.push_back(v);
        s.x2.push_back(v);
    }
    // s(j) = j gives sum c(c+1)/2 and ratio (c+1)/(c-1) > 1 before truncation
    const auto eta = draisma_eta(s, 500);
    REQUIRE(eta.has_value());
    CHECK(*eta == 1.0);
}

TEST_CASE("ratio estimators are near one half under independence") {
    Rng rng(5150);
    BivariateSample s;
    for (int i = 0; i < 20000; ++i) {
        s.x1.push_back(rng.exponential());
        s.x2.push_back(rng.exponential());
    }
    const auto p = peng_eta(s, 500);
    const auto d = draisma_eta(s, 500);
    REQUIRE(p.has_value());
    REQUIRE(d.has_value());
    CHECK(*p == doctest::Approx(0.5).epsilon(0.2));
    CHECK(*d == doctest::Approx(0.5).epsilon(0.2));
}

TEST_CASE("hill lambda at the truncation knee") {
    // structure variable at omega = 1/2 is 2 min(x1, x2) = {1, 2, 2, 2.5,
    // 3.5}; the median threshold is 2, the excesses 0.5 and 1.5, so the
    // reciprocal mean excess is exactly 1, the boundary of truncation
    BivariateSample s;
    for (double v : {0.5, 1.0, 1.0, 1.25, 1.75}) {
        s.x1.push_back(v);
        s.x2.push_back(v);
    }
    const std::vector<double> lam = hill_lambda(s, {0.5}, 0.5);
    CHECK(lam[0] == 1.0);
}

TEST_CASE("hill lambda approaches one under independence") {
    Rng rng(909);
    BivariateSample s;
    for (int i = 0; i < 20000; ++i) {
        s.x1.push_back(rng.exponential());
        s.x2.push_back(rng.exponential());
    }
    const std::vector<double> lam = hill_lambda(s, {0.5}, 0.95);
    CHECK(lam[0] == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("hill tau mean excess on qualifying values") {
    // qualifying set engineered so the 0.5 quantile splits off excesses
    // 0.3, 0.5, 0.7 above threshold 2.0
    BivariateSample s;
    for (double v : {1.0, 1.4, 1.7, 2.0, 2.3, 2.5, 2.7}) {
        s.x1.push_back(v);
        s.x2.push_back(0.0); // always below any positive cap
    }
    for (int i = 0; i < 20; ++i) { // disqualify: other margin far above cap
        s.x1.push_back(1.0);
        s.x2.push_back(100.0);
    }
    const TauCurve t = hill_tau(s, {0.5}, 1, 0.5, 7);
    REQUIRE(t.estimable[0]);
    CHECK(t.value[0] == doctest::Approx(0.5));
}

TEST_CASE("hill tau flags not estimable below the qualifying floor") {
    BivariateSample s;
    for (int i = 0; i < 100; ++i) {
        s.x1.push_back(1.0);
        s.x2.push_back(2.0); // never qualifies at delta < 2
    }
    const TauCurve t = hill_tau(s, {0.5}, 1, 0.85, 20);
    CHECK_FALSE(t.estimable[0]);
}

TEST_CASE("hill tau recovers one at delta one under independence") {
    Rng rng(3141);
    BivariateSample s;
    for (int i = 0; i < 10000; ++i) {
        s.x1.push_back(rng.exponential());
        s.x2.push_back(rng.exponential());
    }
    const TauCurve t = hill_tau(s, {1.0}, 1);
    REQUIRE(t.estimable[0]);
    CHECK(t.value[0] == doctest::Approx(1.0).epsilon(0.08));
}

TEST_CASE("summary ties every measure to one boundary") {
    const CopulaSpec spec = CopulaSpec::inverted_logistic(0.5);
    const BivariateSample s = sample_copula(spec, 20000, 424242);

    SummaryConfig cfg;
    for (int i = 1; i <= 99; ++i) cfg.omega_grid.push_back(i / 100.0);
    for (int i = 1; i <= 100; ++i) cfg.delta_grid.push_back(i / 100.0);
    const BoundaryPoints b = true_boundary(spec, 2001);
    const DependenceSummary sum = summarize(s, b, cfg);

    CHECK(sum.eta == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-3));
    CHECK(sum.alpha1 == 0.0); // the circular boundary meets the axes
    CHECK(sum.alpha2 == 0.0);
    REQUIRE(sum.beta1.has_value());
    // spread exponent 1 - gamma = 0.5
    CHECK(sum.beta1->beta == doctest::Approx(0.5).epsilon(0.4));

    // self consistency at the exact grid centre omega = 0.5
    CHECK(sum.lambda[49] * 2.0 * sum.eta == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sum.eta >= std::max(sum.alpha1, sum.alpha2));
    for (std::size_t i = 1; i < sum.tau1.value.size(); ++i)
        if (sum.tau1.estimable[i - 1] && sum.tau1.estimable[i])
            CHECK(sum.tau1.value[i] >= sum.tau1.value[i - 1] - 1e-12);
}
