#pragma once

#include <optional>
#include <vector>

#include "limitset/types.hpp"

namespace limitset {

// Clamped B-spline basis on [0, 1]. Interior knots are evenly spaced over
// the observed angle range with the central knot moved to exactly 1/2;
// exterior knots sit at 0 and 1 with multiplicity degree + 1.
class SplineBasis {
public:
    SplineBasis() = default;
    SplineBasis(int degree, std::vector<double> interior);

    int degree() const { return degree_; }
    int dim() const { return dim_; }
    const std::vector<double>& interior_knots() const { return interior_; }

    // All basis function values at w in [0, 1]; length dim(), sums to 1.
    std::vector<double> eval(double w) const;

private:
    int degree_ = 1;
    int dim_ = 0;
    std::vector<double> interior_;
    std::vector<double> knots_; // full clamped vector
};

// kappa evenly spaced interior knots spanning [w_min, w_max], central knot
// adjusted to 1/2. kappa must be odd and at least degree + 1. Interior
// knots that fall on 0 or 1 are absorbed into the exterior clamps.
SplineBasis build_basis(int degree, int kappa, double w_min, double w_max);

// Quantile curve for log R given W = w, a linear B-spline model fitted by
// minimising the pinball loss at level q_u.
struct ThresholdCurve {
    SplineBasis basis;
    std::vector<double> coef;   // coefficients on the log radius scale
    double q_u = 0.5;
    double w_min = 0;           // observed angle range of the fit
    double w_max = 1;

    double threshold_at(double w) const; // u(w) = exp(spline)
};

ThresholdCurve fit_threshold_quantile(const PolarSample& polar, const SplineBasis& basis,
                                      double q_u);

// Check loss evaluated at a coefficient vector; exposed for tests.
double pinball_objective(const PolarSample& polar, const SplineBasis& basis,
                         const std::vector<double>& coef, double q_u);

// Tail surface above the threshold curve: spline for the log scale,
// single shape parameter across all angles.
struct SplineSurface {
    SplineBasis basis;
    ThresholdCurve threshold;
    std::vector<double> logscale_coef;
    double xi = 0;
    double w_min = 0;
    double w_max = 1;
    double nll = 0;             // negative log likelihood at the optimum
    std::size_t n_exceedances = 0;

    double scale_at(double w) const;
};

// Joint likelihood fit of the scale spline and shape to all radii
// exceeding the threshold curve. Initialised from the constant-scale fit,
// so the result can only improve on it.
SplineSurface fit_gpd_gam(const PolarSample& polar, const ThresholdCurve& threshold,
                          const SplineBasis& basis);

// Radial quantile of the surface at angle w and level q. Angles outside
// the observed range are not estimable and yield nullopt.
std::optional<double> predict_radial_quantile(const SplineSurface& surface, double w, double q);

} // namespace limitset
