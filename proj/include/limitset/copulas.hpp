#pragma once

#include <cstdint>
#include <string>

#include "limitset/types.hpp"

namespace limitset {

enum class CopulaFamily { gaussian, logistic, inverted_logistic, asymmetric_logistic };

// A parametric dependence structure paired with standard exponential
// margins. Serves both as a simulator and as an oracle: the gauge
// function, limit-set boundary and dependence measures are available in
// closed form for every family.
struct CopulaSpec {
    CopulaFamily family = CopulaFamily::gaussian;
    double rho = 0;        // gaussian correlation, in [0, 1)
    double gamma = 0.5;    // logistic dependence, in (0, 1)
    double theta1 = 0.5;   // asymmetric logistic masses, in (0, 1)
    double theta2 = 0.5;

    static CopulaSpec gaussian(double rho);
    static CopulaSpec logistic(double gamma);
    static CopulaSpec inverted_logistic(double gamma);
    static CopulaSpec asymmetric_logistic(double gamma, double theta1, double theta2);

    void validate() const;        // throws validation_error
    std::string name() const;     // family label used in reports
};

// n independent draws on exact standard exponential margins. The variate
// stream is fully determined by the seed.
BivariateSample sample_copula(const CopulaSpec& spec, std::size_t n, std::uint64_t seed);

// Gauge function g(x1, x2) of the limit set, homogeneous of order 1 and
// equal to 1 on the boundary. Defined for x1, x2 >= 0.
double gauge(const CopulaSpec& spec, double x1, double x2);

// Boundary {g = 1} discretised on a uniform angle grid of size k
// including both endpoints. Radius at angle w is 1 / g(w, 1-w).
BoundaryPoints true_boundary(const CopulaSpec& spec, std::size_t k);

// Closed-form dependence measures on the given grids, including the
// residual tail dependence coefficient chi.
DependenceSummary true_measures(const CopulaSpec& spec,
                                const std::vector<double>& omega_grid,
                                const std::vector<double>& delta_grid);

} // namespace limitset
