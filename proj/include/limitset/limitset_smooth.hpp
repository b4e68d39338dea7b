#pragma once

#include "limitset/limitset_local.hpp"
#include "limitset/splines.hpp"
#include "limitset/types.hpp"

namespace limitset {

// One smooth candidate: a spline tail surface of the given degree,
// evaluated at the estimation angles that fall inside the observed angle
// range, then scaled and truncated with the same eta anchor as the local
// stage.
struct SmoothCandidate {
    LimitSetEstimate g_hat;
    SplineSurface surface;
    std::vector<double> angles;   // grid angles the surface could serve
    std::vector<double> r_hat;    // radial quantiles at those angles
};

SmoothCandidate estimate_smooth_degree(const PolarSample& polar, const LocalStage& local,
                                       int degree, const PipelineConfig& config);

// Index of the smallest score; ties go to the lowest degree.
std::size_t select_degree(const std::vector<double>& scores);

/* The complete two-stage fit: local stage, one smooth candidate per
 * spline degree 1..3, mean absolute deviation of each candidate's radial
 * quantiles from the local ones, and the winning candidate as the final
 * boundary estimate. */
FitResult estimate(const BivariateSample& sample, const PipelineConfig& config);

// Same fit, keeping the fitted tail surfaces (one per degree) for
// reporting. estimate() is this with the surfaces dropped.
struct EstimateDetail {
    FitResult fit;
    std::vector<SplineSurface> surfaces;
};

EstimateDetail estimate_detailed(const BivariateSample& sample, const PipelineConfig& config);

} // namespace limitset
