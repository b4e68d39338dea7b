#include "limitset/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "limitset/errors.hpp"
#include "limitset/margins.hpp"
#include "limitset/optim.hpp"

namespace limitset {

namespace {

void check_boundary(const BoundaryPoints& boundary) {
    if (boundary.size() == 0) throw validation_error("empty boundary");
    for (std::size_t j = 0; j < boundary.size(); ++j)
        if (!(boundary.x1[j] >= 0) || !(boundary.x2[j] >= 0) ||
            !std::isfinite(boundary.x1[j]) || !std::isfinite(boundary.x2[j]))
            throw validation_error("boundary coordinates must be finite and nonnegative");
}

// conditioning / other coordinate pair for a margin index
const std::vector<double>& cond_coord(const BoundaryPoints& b, int margin) {
    return margin == 1 ? b.x1 : b.x2;
}
const std::vector<double>& other_coord(const BoundaryPoints& b, int margin) {
    return margin == 1 ? b.x2 : b.x1;
}

} // namespace

double eta_from_boundary(const BoundaryPoints& boundary) {
    check_boundary(boundary);
    double eta = 0;
    for (std::size_t j = 0; j < boundary.size(); ++j)
        eta = std::max(eta, std::min(boundary.x1[j], boundary.x2[j]));
    if (!(eta > 0)) throw validation_error("boundary does not reach the interior");
    return eta;
}

std::vector<double> lambda_from_boundary(const BoundaryPoints& boundary,
                                         const std::vector<double>& omega_grid) {
    check_boundary(boundary);
    std::vector<double> out;
    out.reserve(omega_grid.size());
    for (double w : omega_grid) {
        if (!(w >= 0 && w <= 1)) throw validation_error("omega outside [0,1]");
        if (w == 0.0 || w == 1.0) {
            out.push_back(1.0);
            continue;
        }
        double s = 0;
        for (std::size_t j = 0; j < boundary.size(); ++j)
            s = std::max(s, std::min(boundary.x1[j] / w, boundary.x2[j] / (1.0 - w)));
        double lam = (s > 0) ? 1.0 / s : 1.0;
        lam = std::max(lam, std::max(w, 1.0 - w));
        lam = std::min(lam, 1.0);
        out.push_back(lam);
    }
    return out;
}

TauCurve tau_from_boundary(const BoundaryPoints& boundary,
                           const std::vector<double>& delta_grid, int margin) {
    check_boundary(boundary);
    if (margin != 1 && margin != 2) throw validation_error("margin must be 1 or 2");
    const std::vector<double>& xc = cond_coord(boundary, margin);
    const std::vector<double>& xo = other_coord(boundary, margin);

    TauCurve out;
    for (double d : delta_grid) {
        if (!(d > 0 && d <= 1)) throw validation_error("delta outside (0,1]");
        double best = 0;
        bool found = false;
        for (std::size_t j = 0; j < boundary.size(); ++j) {
            if (xo[j] <= d * xc[j] && xc[j] > 0) {
                best = std::max(best, xc[j]);
                found = true;
            }
        }
        out.delta.push_back(d);
        out.value.push_back(found ? best : 0.0);
        out.estimable.push_back(found);
    }
    return out;
}

void alpha_from_boundary(const BoundaryPoints& boundary, double& alpha1, double& alpha2) {
    check_boundary(boundary);
    double mx1 = 0, mx2 = 0;
    for (std::size_t j = 0; j < boundary.size(); ++j) {
        mx1 = std::max(mx1, boundary.x1[j]);
        mx2 = std::max(mx2, boundary.x2[j]);
    }
    alpha1 = 0;
    alpha2 = 0;
    for (std::size_t j = 0; j < boundary.size(); ++j) {
        if (boundary.x1[j] == mx1) alpha1 = std::max(alpha1, boundary.x2[j]);
        if (boundary.x2[j] == mx2) alpha2 = std::max(alpha2, boundary.x1[j]);
    }
}

NormalTailFit beta_fit(const BivariateSample& sample, double alpha, int margin,
                       double threshold_q) {
    if (margin != 1 && margin != 2) throw validation_error("margin must be 1 or 2");
    if (!(alpha >= 0 && alpha <= 1)) throw validation_error("alpha outside [0,1]");
    const std::vector<double>& xc = margin == 1 ? sample.x1 : sample.x2;
    const std::vector<double>& xo = margin == 1 ? sample.x2 : sample.x1;

    const double u = empirical_quantile(xc, threshold_q);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (xc[i] > u) {
            x.push_back(xc[i]);
            y.push_back(xo[i]);
        }
    }
    const std::size_t n = x.size();
    if (n < 50) throw validation_error("fewer than 50 conditioning exceedances");

    std::vector<double> logx(n);
    for (std::size_t i = 0; i < n; ++i) logx[i] = std::log(x[i]);
    const double sum_logx = std::accumulate(logx.begin(), logx.end(), 0.0);

    // profile likelihood in beta: given beta the residuals
    // z_i = (y_i - alpha x_i) / x_i^beta are gaussian with free mean and
    // variance, so both profile out in closed form
    auto moments = [&](double beta, double& mean, double& var) {
        double s = 0, ss = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double z = (y[i] - alpha * x[i]) * std::exp(-beta * logx[i]);
            s += z;
            ss += z * z;
        }
        mean = s / static_cast<double>(n);
        var = ss / static_cast<double>(n) - mean * mean;
    };
    auto profile_nll = [&](double beta) {
        double mean, var;
        moments(beta, mean, var);
        if (!(var > 0)) return std::numeric_limits<double>::infinity();
        return 0.5 * static_cast<double>(n) * std::log(var) + beta * sum_logx;
    };

    // coarse scan, then a golden-section refinement around the best cell
    const double hi = 1.0 - 1e-9;
    double best_beta = 0, best_val = profile_nll(0.0);
    for (int i = 1; i <= 20; ++i) {
        const double b = hi * static_cast<double>(i) / 20.0;
        const double v = profile_nll(b);
        if (v < best_val) { best_val = v; best_beta = b; }
    }
    const double lo_br = std::max(0.0, best_beta - hi / 20.0);
    const double hi_br = std::min(hi, best_beta + hi / 20.0);
    const double beta = golden_section(profile_nll, lo_br, hi_br, 1e-7);

    double mean, var;
    moments(beta, mean, var);
    const double scale = std::max(1.0, std::abs(mean));
    if (!(var > 1e-12 * scale * scale))
        throw numerical_error("degenerate conditional residuals");
    return NormalTailFit{beta, mean, std::sqrt(var)};
}

double hill_eta(const BivariateSample& sample, int n_exceed) {
    const std::size_t n = sample.size();
    if (n_exceed < 1) throw validation_error("exceedance count must be positive");
    if (static_cast<std::size_t>(n_exceed) >= n)
        throw validation_error("exceedance count must be below the sample size");
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = std::min(sample.x1[i], sample.x2[i]);
    std::sort(m.begin(), m.end());
    const double u = m[n - static_cast<std::size_t>(n_exceed) - 1];
    double sum = 0;
    std::size_t count = 0;
    for (std::size_t i = n - static_cast<std::size_t>(n_exceed); i < n; ++i) {
        if (m[i] > u) {
            sum += m[i] - u;
            ++count;
        }
    }
    if (count == 0) throw numerical_error("no exceedances above the order statistic");
    return std::min(1.0, sum / static_cast<double>(count));
}

std::vector<std::size_t> joint_exceedance_counts(const BivariateSample& sample,
                                                 std::size_t j_max) {
    const std::size_t n = sample.size();
    if (j_max == 0 || j_max > n) throw validation_error("threshold rank outside 1..n");
    std::vector<double> t1 = sample.x1, t2 = sample.x2;
    std::sort(t1.begin(), t1.end(), std::greater<>());
    std::sort(t2.begin(), t2.end(), std::greater<>());
    std::vector<std::size_t> s(j_max, 0);
    for (std::size_t j = 0; j < j_max; ++j) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (sample.x1[i] >= t1[j] && sample.x2[i] >= t2[j]) ++count;
        s[j] = count;
    }
    return s;
}

std::optional<double> peng_eta(const BivariateSample& sample, std::size_t c) {
    if (2 * c > sample.size()) throw validation_error("need a sample of at least 2c");
    const std::vector<std::size_t> s = joint_exceedance_counts(sample, 2 * c);
    const std::size_t sc = s[c - 1], s2c = s[2 * c - 1];
    if (sc == 0 || s2c == sc) return std::nullopt;
    const double eta = std::log(2.0) /
                       (std::log(static_cast<double>(s2c)) - std::log(static_cast<double>(sc)));
    return std::min(1.0, eta);
}

std::optional<double> draisma_eta(const BivariateSample& sample, std::size_t c) {
    if (2 * c > sample.size()) throw validation_error("need a sample of at least 2c");
    const std::vector<std::size_t> s = joint_exceedance_counts(sample, c);
    double total = 0;
    for (std::size_t j = 0; j < c; ++j) total += static_cast<double>(s[j]);
    const double denom = static_cast<double>(c) * static_cast<double>(s[c - 1]) - total;
    if (!(denom > 0)) return std::nullopt;
    return std::min(1.0, total / denom);
}

std::vector<double> hill_lambda(const BivariateSample& sample,
                                const std::vector<double>& omega_grid, double threshold_q) {
    std::vector<double> out;
    out.reserve(omega_grid.size());
    std::vector<double> m(sample.size());
    for (double w : omega_grid) {
        if (!(w >= 0 && w <= 1)) throw validation_error("omega outside [0,1]");
        if (w == 0.0 || w == 1.0) {
            out.push_back(1.0);
            continue;
        }
        for (std::size_t i = 0; i < sample.size(); ++i)
            m[i] = std::min(sample.x1[i] / w, sample.x2[i] / (1.0 - w));
        const double u = empirical_quantile(m, threshold_q);
        double sum = 0;
        std::size_t count = 0;
        for (double v : m) {
            if (v > u) {
                sum += v - u;
                ++count;
            }
        }
        if (count == 0) {
            out.push_back(1.0);
            continue;
        }
        const double mean_excess = sum / static_cast<double>(count);
        out.push_back(std::min(1.0, 1.0 / mean_excess));
    }
    return out;
}

TauCurve hill_tau(const BivariateSample& sample, const std::vector<double>& delta_grid,
                  int margin, double threshold_q, std::size_t min_qualifying) {
    if (margin != 1 && margin != 2) throw validation_error("margin must be 1 or 2");
    const std::vector<double>& xc = margin == 1 ? sample.x1 : sample.x2;
    const std::vector<double>& xo = margin == 1 ? sample.x2 : sample.x1;

    TauCurve out;
    for (double d : delta_grid) {
        if (!(d > 0 && d <= 1)) throw validation_error("delta outside (0,1]");
        std::vector<double> qualifying;
        for (std::size_t i = 0; i < sample.size(); ++i)
            if (xo[i] <= d * xc[i]) qualifying.push_back(xc[i]);
        out.delta.push_back(d);
        if (qualifying.size() < min_qualifying) {
            out.value.push_back(0.0);
            out.estimable.push_back(false);
            continue;
        }
        const double u = empirical_quantile(qualifying, threshold_q);
        double sum = 0;
        std::size_t count = 0;
        for (double v : qualifying) {
            if (v > u) {
                sum += v - u;
                ++count;
            }
        }
        if (count == 0) {
            out.value.push_back(0.0);
            out.estimable.push_back(false);
            continue;
        }
        out.value.push_back(std::min(1.0, sum / static_cast<double>(count)));
        out.estimable.push_back(true);
    }
    return out;
}

DependenceSummary summarize(const BivariateSample& sample, const BoundaryPoints& boundary,
                            const SummaryConfig& config) {
    DependenceSummary out;
    out.eta = eta_from_boundary(boundary);
    out.omega_grid = config.omega_grid;
    out.lambda = lambda_from_boundary(boundary, config.omega_grid);
    out.tau1 = tau_from_boundary(boundary, config.delta_grid, 1);
    out.tau2 = tau_from_boundary(boundary, config.delta_grid, 2);
    alpha_from_boundary(boundary, out.alpha1, out.alpha2);
    for (int margin : {1, 2}) {
        auto& slot = margin == 1 ? out.beta1 : out.beta2;
        const double alpha = margin == 1 ? out.alpha1 : out.alpha2;
        try {
            slot = beta_fit(sample, alpha, margin, config.beta_threshold_q);
        } catch (const std::runtime_error&) {
            slot = std::nullopt; // too few exceedances or degenerate residuals
        }
    }
    return out;
}

} // namespace limitset
