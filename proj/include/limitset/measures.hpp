#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "limitset/types.hpp"

namespace limitset {

// ---- functionals of an estimated or true boundary ----

// Coefficient of joint tail decay: the largest min(x1, x2) over the
// boundary, the point where the boundary crosses the diagonal.
double eta_from_boundary(const BoundaryPoints& boundary);

// Angular tail decay on an omega grid. For interior omega this is the
// reciprocal of the largest min(x1/omega, x2/(1-omega)); the result is
// clamped to its geometric range [max(omega, 1-omega), 1]. The endpoints
// are 1 by convention.
std::vector<double> lambda_from_boundary(const BoundaryPoints& boundary,
                                         const std::vector<double>& omega_grid);

// Single-margin tail decay under a proportionality cap on the other
// margin. tau1(delta) is the largest x1 among boundary points with
// x2 <= delta * x1; a delta with no qualifying point is not estimable.
// margin selects the conditioning coordinate (1 or 2).
TauCurve tau_from_boundary(const BoundaryPoints& boundary,
                           const std::vector<double>& delta_grid, int margin);

// Conditional-extremes slopes: alpha1 is the x2 value where the boundary
// attains its largest x1 (the largest such x2 if several points tie),
// and symmetrically for alpha2.
void alpha_from_boundary(const BoundaryPoints& boundary, double& alpha1, double& alpha2);

// ---- conditional spread exponent ----

// Fits X_other | X_cond = x ~ N(alpha x + x^beta mu, (x^beta sigma)^2) to
// exceedances of the conditioning margin above its threshold_q quantile,
// by profile likelihood over beta in [0, 1). margin selects the
// conditioning coordinate. Throws validation_error with fewer than 50
// exceedances and numerical_error when the residuals are degenerate.
NormalTailFit beta_fit(const BivariateSample& sample, double alpha, int margin,
                       double threshold_q = 0.9);

// ---- baseline estimators on the sample itself ----

// Mean excess of min(X1, X2) above its (n - n_exceed)-th order statistic,
// truncated to at most 1.
double hill_eta(const BivariateSample& sample, int n_exceed = 500);

// Joint exceedance counts s(j) = #{i : x1_i >= t1_j and x2_i >= t2_j},
// where t_j is the j-th largest value of the respective margin, for
// j = 1..j_max. Exposed for the rank-based eta estimators and tests.
std::vector<std::size_t> joint_exceedance_counts(const BivariateSample& sample,
                                                 std::size_t j_max);

// Ratio estimator log 2 / log{s(2c)/s(c)}, truncated at 1; not estimable
// when s(c) = 0 or s(2c) = s(c).
std::optional<double> peng_eta(const BivariateSample& sample, std::size_t c = 500);

// Sum-ratio estimator sum_{j<=c} s(j) / {c s(c) - sum_{j<=c} s(j)},
// truncated at 1; not estimable when the denominator vanishes.
std::optional<double> draisma_eta(const BivariateSample& sample, std::size_t c = 500);

// Reciprocal mean excess of min(X1/omega, X2/(1-omega)) above its
// threshold_q quantile, truncated at 1; endpoints are 1 by convention.
std::vector<double> hill_lambda(const BivariateSample& sample,
                                const std::vector<double>& omega_grid,
                                double threshold_q = 0.95);

// Mean excess of the conditioning margin over the subsample obeying the
// proportionality cap, truncated at 1. Deltas with fewer than
// min_qualifying points in the cap, or with no threshold exceedances,
// are not estimable.
TauCurve hill_tau(const BivariateSample& sample, const std::vector<double>& delta_grid,
                  int margin, double threshold_q = 0.85, std::size_t min_qualifying = 20);

// ---- combined report ----

struct SummaryConfig {
    std::vector<double> omega_grid;
    std::vector<double> delta_grid;
    double beta_threshold_q = 0.9;
};

// All dependence measures implied by one boundary estimate, with the
// conditional spread exponents fitted from the sample. A failed beta fit
// leaves the field empty rather than failing the summary.
DependenceSummary summarize(const BivariateSample& sample, const BoundaryPoints& boundary,
                            const SummaryConfig& config);

} // namespace limitset
