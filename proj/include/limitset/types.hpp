#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace limitset {

// Raw bivariate observations on arbitrary margins.
struct RawSample {
    std::vector<double> y1;
    std::vector<double> y2;

    std::size_t size() const { return y1.size(); }
};

// Observations on standard exponential margins, the working scale of the
// whole pipeline. Produced by to_exponential_margins or by a simulator.
struct BivariateSample {
    std::vector<double> x1;
    std::vector<double> x2;

    std::size_t size() const { return x1.size(); }
};

// Pseudo-polar coordinates: r = x1 + x2, w = x1 / r.
struct PolarSample {
    std::vector<double> r;
    std::vector<double> w;

    std::size_t size() const { return r.size(); }
};

// A discretised boundary curve. Points are stored angle by angle; x1, x2
// are the cartesian coordinates of the boundary point at each angle.
struct BoundaryPoints {
    std::vector<double> w;
    std::vector<double> x1;
    std::vector<double> x2;

    std::size_t size() const { return w.size(); }
};

// Tuning parameters shared by the local and smooth estimation stages.
struct PipelineConfig {
    int k = 199;                 // number of estimation angles, odd
    int m = 100;                 // angular neighbourhood size
    double q_u = 0.5;            // local threshold quantile level
    double q = 0.999;            // radial quantile level defining the boundary
    int kappa = 7;               // interior knots, odd
    int eta_exceedances = 500;   // exceedances for the hill eta baseline
    // Optional explicit angle grid; bypasses select_angles when set.
    std::optional<std::vector<double>> angle_override;
};

// One local threshold-exceedance fit at an estimation angle.
struct LocalFit {
    double w = 0;       // estimation angle
    double u = 0;       // local threshold (q_u quantile of neighbourhood radii)
    double sigma = 0;   // tail scale
    double xi = 0;      // tail shape
    double r_hat = 0;   // radial quantile at level q
};

// Output of the local stage or of one smooth-stage degree.
struct LimitSetEstimate {
    BoundaryPoints points;
    double scale_factor = 1;     // multiplier applied before truncation
    double eta_h = 0;            // baseline eta the scaling was anchored to
};

enum class SplineDegree : int { linear = 1, quadratic = 2, cubic = 3 };

// Full two-stage fit. g_hat is the selected smooth boundary; per-degree
// candidates and scores are kept for diagnostics.
struct FitResult {
    LimitSetEstimate g_hat;          // selected smooth estimate
    LimitSetEstimate g_local;        // local-stage estimate on the same angles
    int degree = 1;                  // selected spline degree
    std::vector<double> mae;         // mean absolute error per degree (1, 2, 3)
    std::vector<LimitSetEstimate> per_degree;
    std::vector<LocalFit> local_fits;
    double eta_h = 0;
    double w_min = 0;                // observed angle range
    double w_max = 1;
};

// Scale-free normal working model for the conditional tail
// X2 | X1 = x ~ N(alpha x + x^beta mu, (x^beta sigma)^2).
struct NormalTailFit {
    double beta = 0;
    double mu = 0;
    double sigma = 0;
};

// A tau curve on a delta grid; value[i] is meaningful only where
// estimable[i] is true. Not-estimable is a value, never an exception.
struct TauCurve {
    std::vector<double> delta;
    std::vector<double> value;
    std::vector<bool> estimable;
};

// The full set of extremal dependence measures derived from one boundary.
struct DependenceSummary {
    double eta = 0;
    std::vector<double> omega_grid;
    std::vector<double> lambda;
    TauCurve tau1;
    TauCurve tau2;
    double alpha1 = 0;
    double alpha2 = 0;
    std::optional<NormalTailFit> beta1;
    std::optional<NormalTailFit> beta2;
    std::optional<double> chi;   // closed form, copula oracles only
};

} // namespace limitset
