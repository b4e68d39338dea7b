#include "limitset/limitset_smooth.hpp"

#include <algorithm>
#include <cmath>

#include "limitset/errors.hpp"
#include "limitset/margins.hpp"

namespace limitset {

SmoothCandidate estimate_smooth_degree(const PolarSample& polar, const LocalStage& local,
                                       int degree, const PipelineConfig& config) {
    const SplineBasis basis = build_basis(degree, config.kappa, local.w_min, local.w_max);
    const ThresholdCurve threshold = fit_threshold_quantile(polar, basis, config.q_u);
    SmoothCandidate cand;
    cand.surface = fit_gpd_gam(polar, threshold, basis);

    for (double w : local.angles) {
        const auto r = predict_radial_quantile(cand.surface, w, config.q);
        if (!r) continue; // outside the observed angle range
        cand.angles.push_back(w);
        cand.r_hat.push_back(*r);
    }
    if (cand.angles.empty()) throw numerical_error("no estimable angles for the surface");

    PolarSample tilde;
    tilde.r = cand.r_hat;
    tilde.w = cand.angles;
    const BivariateSample cart = from_polar(tilde);
    BoundaryPoints pts;
    pts.w = tilde.w;
    pts.x1 = cart.x1;
    pts.x2 = cart.x2;
    cand.g_hat = scale_truncate(pts, local.eta_h);
    return cand;
}

std::size_t select_degree(const std::vector<double>& scores) {
    if (scores.empty()) throw validation_error("no candidate scores");
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] < scores[best]) best = i;
    return best;
}

EstimateDetail estimate_detailed(const BivariateSample& sample, const PipelineConfig& config) {
    const LocalStage local = estimate_local(sample, config);
    const PolarSample polar = to_polar(sample);

    EstimateDetail detail;
    FitResult& out = detail.fit;
    out.g_local = local.g_hat;
    out.local_fits = local.fits;
    out.eta_h = local.eta_h;
    out.w_min = local.w_min;
    out.w_max = local.w_max;

    for (int degree : {1, 2, 3}) {
        SmoothCandidate cand = estimate_smooth_degree(polar, local, degree, config);
        // mean absolute deviation from the local radial quantiles over the
        // angles both stages can serve
        double sum = 0;
        for (std::size_t i = 0; i < cand.angles.size(); ++i) {
            // the candidate's angle list is a subsequence of the grid
            const auto it = std::find(local.angles.begin(), local.angles.end(),
                                      cand.angles[i]);
            const std::size_t j = static_cast<std::size_t>(it - local.angles.begin());
            sum += std::abs(local.fits[j].r_hat - cand.r_hat[i]);
        }
        out.mae.push_back(sum / static_cast<double>(cand.angles.size()));
        out.per_degree.push_back(cand.g_hat);
        detail.surfaces.push_back(std::move(cand.surface));
    }

    const std::size_t best = select_degree(out.mae);
    out.degree = static_cast<int>(best) + 1;
    out.g_hat = out.per_degree[best];
    return detail;
}

FitResult estimate(const BivariateSample& sample, const PipelineConfig& config) {
    return estimate_detailed(sample, config).fit;
}

} // namespace limitset
