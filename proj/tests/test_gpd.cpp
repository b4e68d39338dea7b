#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "limitset/errors.hpp"
#include "limitset/gpd.hpp"
#include "limitset/rng.hpp"

using namespace limitset;

TEST_CASE("cdf known values") {
    CHECK(gpd_cdf({0.0, 1.0, 0.0, 1.0}, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gpd_cdf({1.0, 2.0, 0.5, 1.0}, 3.0) ==
          doctest::Approx(0.5555555555555556).epsilon(1e-12));
    // finite upper endpoint for negative shape
    CHECK(gpd_cdf({0.0, 1.0, -0.5, 1.0}, 2.0) == doctest::Approx(1.0));
    CHECK(gpd_cdf({0.0, 1.0, -0.5, 1.0}, 5.0) == doctest::Approx(1.0));
    CHECK(gpd_cdf({0.0, 1.0, 0.3, 1.0}, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("cdf rejects points below the threshold") {
    CHECK_THROWS_AS(gpd_cdf({1.0, 1.0, 0.0, 1.0}, 0.5), validation_error);
}

TEST_CASE("radial quantile known values") {
    CHECK(radial_quantile({0.0, 1.0, 0.0, 0.5}, 0.999) ==
          doctest::Approx(6.214608098422191).epsilon(1e-12));
    CHECK(radial_quantile({2.0, 1.0, 0.5, 0.5}, 0.999) ==
          doctest::Approx(44.721359549995796).epsilon(1e-12));
    // at q = 1 - zeta_u the quantile is the threshold itself
    CHECK(radial_quantile({2.0, 1.0, 0.5, 0.5}, 0.5) == doctest::Approx(2.0));
}

TEST_CASE("radial quantile rejects levels below the threshold") {
    CHECK_THROWS_AS(radial_quantile({0.0, 1.0, 0.0, 0.5}, 0.4), validation_error);
}

TEST_CASE("quantile and cdf are mutually inverse through the exceedance rate") {
    for (double xi : {-0.4, -1e-7, 0.0, 1e-7, 0.2, 0.8}) {
        GpdFit fit{1.5, 2.5, xi, 0.3};
        for (double q : {0.71, 0.9, 0.999, 0.99999}) {
            const double r = radial_quantile(fit, q);
            const double level = 1.0 - fit.zeta_u * (1.0 - gpd_cdf(fit, r));
            CHECK(level == doctest::Approx(q).epsilon(1e-10));
        }
    }
}

TEST_CASE("exponential branch joins the general formula continuously") {
    GpdFit just_above{0.0, 1.3, 1.0000001e-6, 0.5};
    GpdFit just_below{0.0, 1.3, 0.9999999e-6, 0.5};
    for (double q : {0.9, 0.999}) {
        const double a = radial_quantile(just_above, q);
        const double b = radial_quantile(just_below, q);
        CHECK(std::abs(a - b) < 1e-5 * (1.0 + std::abs(a)));
    }
    const double ca = gpd_cdf(just_above, 2.0);
    const double cb = gpd_cdf(just_below, 2.0);
    CHECK(std::abs(ca - cb) < 1e-6);
}

namespace {

// Inverse-cdf draws from an exact generalized Pareto.
std::vector<double> gpd_draws(double sigma, double xi, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> z(n);
    for (auto& v : z) {
        const double s = rng.uniform(); // survivor probability
        v = (xi == 0.0) ? -sigma * std::log(s) : sigma / xi * (std::pow(s, -xi) - 1.0);
    }
    return z;
}

} // namespace

TEST_CASE("mle recovers exponential excesses") {
    auto z = gpd_draws(1.0, 0.0, 100000, 11);
    GpdFit fit = fit_gpd_mle(z, 0.0, 0.5);
    CHECK(fit.sigma == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(fit.xi) < 0.02);
    CHECK(fit.u == 0.0);
    CHECK(fit.zeta_u == 0.5);
}

TEST_CASE("mle recovers a heavy-tailed fit") {
    auto z = gpd_draws(2.0, 0.3, 100000, 12);
    GpdFit fit = fit_gpd_mle(z, 0.0, 1.0);
    CHECK(fit.sigma == doctest::Approx(2.0).epsilon(0.02));
    CHECK(fit.xi == doctest::Approx(0.3).epsilon(0.05));
    // the fit cannot have lower likelihood than the generating parameters
    CHECK(gpd_nll(z, fit.sigma, fit.xi) <= gpd_nll(z, 2.0, 0.3) + 1e-6);
}

TEST_CASE("mle recovers a bounded tail") {
    auto z = gpd_draws(1.0, -0.4, 50000, 13);
    GpdFit fit = fit_gpd_mle(z, 0.0, 1.0);
    CHECK(fit.sigma == doctest::Approx(1.0).epsilon(0.03));
    CHECK(fit.xi == doctest::Approx(-0.4).epsilon(0.05));
}

TEST_CASE("mle is scale equivariant") {
    auto z = gpd_draws(1.0, 0.1, 2000, 14);
    GpdFit base = fit_gpd_mle(z, 0.0, 1.0);
    std::vector<double> scaled = z;
    for (auto& v : scaled) v *= 100.0;
    GpdFit big = fit_gpd_mle(scaled, 0.0, 1.0);
    CHECK(big.sigma == doctest::Approx(100.0 * base.sigma).epsilon(1e-4));
    CHECK(big.xi == doctest::Approx(base.xi).epsilon(1e-3));
}

TEST_CASE("degenerate excesses are rejected") {
    std::vector<double> z(50, 2.0);
    CHECK_THROWS_AS(fit_gpd_mle(z, 0.0, 0.5), numerical_error);
}

TEST_CASE("nonpositive excesses are rejected") {
    std::vector<double> z{0.5, -0.1, 1.0, 0.2, 0.9, 1.4, 0.3, 2.0, 0.7, 1.1};
    CHECK_THROWS_AS(fit_gpd_mle(z, 0.0, 0.5), validation_error);
}

TEST_CASE("excess floor is enforced and configurable") {
    std::vector<double> z{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5};
    CHECK_THROWS_AS(fit_gpd_mle(z, 0.0, 0.5), validation_error);
    CHECK_NOTHROW(fit_gpd_mle(z, 0.0, 0.5, 5));
}
