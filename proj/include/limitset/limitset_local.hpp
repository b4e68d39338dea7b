#pragma once

#include "limitset/types.hpp"

namespace limitset {

/* Estimation angles: empirical (j-1)/(k-1) quantiles of the observed
 * angles for j = 1..k-1, plus 1/2 as the final entry. The grid is
 * deliberately unordered (the centre angle comes last) and always spans
 * the observed angle range. */
std::vector<double> select_angles(const PolarSample& polar, int k);

/* One tail fit per estimation angle: the m angularly nearest radii form
 * the neighbourhood, the q_u quantile of those radii the threshold, and
 * the radial q quantile comes from the fitted tail. Distance ties are
 * broken by angle then radius value, which keeps the whole stage
 * invariant under row permutations. */
std::vector<LocalFit> local_quantiles(const PolarSample& polar,
                                      const std::vector<double>& angles, int m,
                                      double q_u, double q);

/* Two-step normalisation of a raw boundary estimate: scale every point by
 * eta_h / max_j min(x1_j, x2_j), then per coordinate either truncate at 1
 * (when the coordinate maximum is at least 1) or divide by the coordinate
 * maximum (when it is below 1). Both coordinate maxima end up exactly 1. */
LimitSetEstimate scale_truncate(const BoundaryPoints& tilde, double eta_h);

// Everything the local stage produces; the smooth stage reuses the angles,
// the local fits and the eta anchor.
struct LocalStage {
    LimitSetEstimate g_hat;
    std::vector<LocalFit> fits;
    std::vector<double> angles;
    double eta_h = 0;
    double w_min = 0;
    double w_max = 1;
};

/* The full local pipeline: polar transform, angle selection, local tail
 * fits, back transform, scaling and truncation. The sample must already
 * be on exponential margins. */
LocalStage estimate_local(const BivariateSample& sample, const PipelineConfig& config);

} // namespace limitset
