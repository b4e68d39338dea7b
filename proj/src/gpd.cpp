#include "limitset/gpd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "limitset/errors.hpp"
#include "limitset/optim.hpp"

namespace limitset {

namespace {

constexpr double kXiZeroTol = 1e-6;   // exponential-branch switch
constexpr double kXiLo = -0.95;
constexpr double kXiHi = 1.0;

double xi_from_unconstrained(double phi) {
    return 0.5 * (kXiLo + kXiHi) + 0.5 * (kXiHi - kXiLo) * std::tanh(phi);
}

double unconstrained_from_xi(double xi) {
    return std::atanh((xi - 0.5 * (kXiLo + kXiHi)) / (0.5 * (kXiHi - kXiLo)));
}

} // namespace

double gpd_cdf(const GpdFit& fit, double r) {
    if (!(fit.sigma > 0)) throw validation_error("gpd scale must be positive");
    if (r < fit.u) throw validation_error("gpd_cdf below threshold");
    const double z = r - fit.u;
    if (std::abs(fit.xi) < kXiZeroTol) return -std::expm1(-z / fit.sigma);
    const double arg = 1.0 + fit.xi * z / fit.sigma;
    if (arg <= 0) return 1.0; // past the upper endpoint, xi < 0
    return -std::expm1(-std::log(arg) / fit.xi);
}

double radial_quantile(const GpdFit& fit, double q) {
    if (!(fit.sigma > 0)) throw validation_error("gpd scale must be positive");
    if (!(q > 0 && q < 1)) throw validation_error("quantile level outside (0,1)");
    if (!(fit.zeta_u > 0 && fit.zeta_u <= 1)) throw validation_error("zeta_u outside (0,1]");
    if (1.0 - q > fit.zeta_u) throw validation_error("quantile level below threshold");
    const double lr = std::log(fit.zeta_u / (1.0 - q));
    if (std::abs(fit.xi) < kXiZeroTol) return fit.u + fit.sigma * lr;
    return fit.u + fit.sigma * std::expm1(fit.xi * lr) / fit.xi;
}

double gpd_nll(const std::vector<double>& excesses, double sigma, double xi) {
    if (!(sigma > 0)) return std::numeric_limits<double>::infinity();
    double nll = 0;
    if (std::abs(xi) < 1e-10) {
        for (double z : excesses) nll += std::log(sigma) + z / sigma;
        return nll;
    }
    for (double z : excesses) {
        const double arg = 1.0 + xi * z / sigma;
        if (arg <= 0) return std::numeric_limits<double>::infinity();
        nll += std::log(sigma) + (1.0 + 1.0 / xi) * std::log(arg);
    }
    return nll;
}

GpdFit fit_gpd_mle(const std::vector<double>& excesses, double u, double zeta_u,
                   std::size_t min_excesses) {
    if (excesses.size() < std::max<std::size_t>(2, min_excesses))
        throw validation_error("too few excesses for a tail fit");
    double zmin = excesses.front(), zmax = excesses.front(), zsum = 0;
    for (double z : excesses) {
        if (!(z > 0)) throw validation_error("excesses must be positive");
        zmin = std::min(zmin, z);
        zmax = std::max(zmax, z);
        zsum += z;
    }
    if (zmax - zmin <= 1e-14 * zmax)
        throw numerical_error("degenerate excesses, all values equal");

    const double sigma0 = zsum / static_cast<double>(excesses.size());
    const std::vector<double> x0 = {std::log(sigma0), unconstrained_from_xi(0.0)};
    auto obj = [&](const std::vector<double>& th) {
        return gpd_nll(excesses, std::exp(th[0]), xi_from_unconstrained(th[1]));
    };
    OptimResult r = nelder_mead(obj, x0, {0.3, 0.3});
    if (!r.converged) throw numerical_error("gpd likelihood search did not converge");

    GpdFit fit;
    fit.u = u;
    fit.sigma = std::exp(r.x[0]);
    fit.xi = xi_from_unconstrained(r.x[1]);
    fit.zeta_u = zeta_u;
    return fit;
}

} // namespace limitset
