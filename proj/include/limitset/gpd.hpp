#pragma once

#include <cstddef>
#include <vector>

namespace limitset {

// Generalized Pareto tail model for exceedances above a threshold u.
// zeta_u is the probability of exceeding u, carried along so radial
// quantiles at levels beyond the threshold can be computed directly.
struct GpdFit {
    double u = 0;
    double sigma = 1;
    double xi = 0;
    double zeta_u = 1;
};

// Distribution function of the excess r - u >= 0 under the fit,
//     H(z) = 1 - (1 + xi z / sigma)_+^(-1/xi),
// with the exponential limit used when |xi| < 1e-6. Values past a finite
// upper endpoint (xi < 0) map to 1. Throws for r < u.
double gpd_cdf(const GpdFit& fit, double r);

// Quantile of the radial variable at level q, valid for q >= 1 - zeta_u:
//     r_q = u + sigma/xi * [ (zeta_u / (1-q))^xi - 1 ],
// exponential limit u + sigma log(zeta_u / (1-q)) when |xi| < 1e-6.
double radial_quantile(const GpdFit& fit, double q);

// Maximum likelihood fit to a set of positive excesses. The shape is kept
// in (-0.95, 1) through a smooth reparameterisation; the optimiser is a
// simplex search from moment-based starting values. Requires at least
// min_excesses values. Throws numerical_error when the excesses are
// degenerate (all equal) or the search fails to converge.
GpdFit fit_gpd_mle(const std::vector<double>& excesses, double u, double zeta_u,
                   std::size_t min_excesses = 10);

// Negative log likelihood used by the fit; exposed for tests.
double gpd_nll(const std::vector<double>& excesses, double sigma, double xi);

} // namespace limitset
