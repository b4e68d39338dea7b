#include "limitset/limitset_local.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "limitset/errors.hpp"
#include "limitset/gpd.hpp"
#include "limitset/margins.hpp"
#include "limitset/measures.hpp"

namespace limitset {

std::vector<double> select_angles(const PolarSample& polar, int k) {
    if (k < 3 || k % 2 == 0) throw validation_error("angle count must be odd and at least 3");
    if (polar.size() < 2) throw validation_error("too few observations");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k - 1; ++j) {
        const double level = static_cast<double>(j - 1) / static_cast<double>(k - 1);
        grid.push_back(empirical_quantile(polar.w, level));
    }
    grid.push_back(0.5);
    return grid;
}

std::vector<LocalFit> local_quantiles(const PolarSample& polar,
                                      const std::vector<double>& angles, int m,
                                      double q_u, double q) {
    const std::size_t n = polar.size();
    if (m < 4) throw validation_error("neighbourhood size too small");
    if (static_cast<std::size_t>(m) > n)
        throw validation_error("neighbourhood size exceeds the sample size");
    if (!(q_u > 0 && q_u < 1) || !(q > 0 && q < 1) || q <= q_u)
        throw validation_error("quantile levels must satisfy 0 < q_u < q < 1");

    std::vector<LocalFit> fits;
    fits.reserve(angles.size());
    std::vector<std::size_t> idx(n);
    std::vector<double> radii(static_cast<std::size_t>(m));
    std::map<double, std::size_t> seen; // duplicate angles share one fit
    for (double w_star : angles) {
        if (!(w_star >= 0 && w_star <= 1)) throw validation_error("angle outside [0,1]");
        if (const auto hit = seen.find(w_star); hit != seen.end()) {
            fits.push_back(fits[hit->second]);
            continue;
        }
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        auto key = [&](std::size_t i) {
            return std::make_tuple(std::abs(polar.w[i] - w_star), polar.w[i], polar.r[i]);
        };
        std::nth_element(idx.begin(), idx.begin() + (m - 1), idx.end(),
                         [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        for (int i = 0; i < m; ++i) radii[static_cast<std::size_t>(i)] = polar.r[idx[i]];
        // canonical order: the fit must not depend on how rows were stored
        std::sort(radii.begin(), radii.end());

        const double u = empirical_quantile(radii, q_u);
        std::vector<double> excesses;
        for (double r : radii)
            if (r > u) excesses.push_back(r - u);

        GpdFit fit;
        try {
            fit = fit_gpd_mle(excesses, u, q_u);
        } catch (const std::runtime_error& e) {
            throw numerical_error("tail fit failed at angle index " +
                                  std::to_string(fits.size()) + ": " + e.what());
        }
        LocalFit lf;
        lf.w = w_star;
        lf.u = u;
        lf.sigma = fit.sigma;
        lf.xi = fit.xi;
        lf.r_hat = radial_quantile(fit, q);
        seen.emplace(w_star, fits.size());
        fits.push_back(lf);
    }
    return fits;
}

LimitSetEstimate scale_truncate(const BoundaryPoints& tilde, double eta_h) {
    if (tilde.size() == 0) throw validation_error("empty boundary");
    if (!(eta_h > 0 && eta_h <= 1)) throw validation_error("eta anchor outside (0,1]");
    double max_min = 0;
    for (std::size_t j = 0; j < tilde.size(); ++j) {
        if (!std::isfinite(tilde.x1[j]) || !std::isfinite(tilde.x2[j]) ||
            tilde.x1[j] < 0 || tilde.x2[j] < 0)
            throw validation_error("boundary coordinates must be finite and nonnegative");
        max_min = std::max(max_min, std::min(tilde.x1[j], tilde.x2[j]));
    }
    if (!(max_min > 0)) throw validation_error("all boundary points lie on an axis");

    LimitSetEstimate est;
    est.scale_factor = eta_h / max_min;
    est.eta_h = eta_h;
    est.points = tilde;
    for (std::size_t j = 0; j < tilde.size(); ++j) {
        est.points.x1[j] *= est.scale_factor;
        est.points.x2[j] *= est.scale_factor;
    }
    for (std::vector<double>* coord : {&est.points.x1, &est.points.x2}) {
        const double mx = *std::max_element(coord->begin(), coord->end());
        if (mx >= 1.0)
            for (double& v : *coord) v = std::min(1.0, v);
        else
            for (double& v : *coord) v /= mx;
    }
    return est;
}

LocalStage estimate_local(const BivariateSample& sample, const PipelineConfig& config) {
    if (sample.size() < static_cast<std::size_t>(config.eta_exceedances) + 1)
        throw validation_error("sample too small for the eta baseline");
    const PolarSample polar = to_polar(sample);

    LocalStage stage;
    stage.angles = config.angle_override ? *config.angle_override
                                         : select_angles(polar, config.k);
    stage.fits = local_quantiles(polar, stage.angles, config.m, config.q_u, config.q);
    stage.eta_h = hill_eta(sample, config.eta_exceedances);
    stage.w_min = *std::min_element(polar.w.begin(), polar.w.end());
    stage.w_max = *std::max_element(polar.w.begin(), polar.w.end());

    PolarSample tilde;
    for (const LocalFit& f : stage.fits) {
        tilde.r.push_back(f.r_hat);
        tilde.w.push_back(f.w);
    }
    const BivariateSample cart = from_polar(tilde);
    BoundaryPoints pts;
    pts.w = tilde.w;
    pts.x1 = cart.x1;
    pts.x2 = cart.x2;
    stage.g_hat = scale_truncate(pts, stage.eta_h);
    return stage;
}

} // namespace limitset
