#include "limitset/splines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "limitset/errors.hpp"
#include "limitset/gpd.hpp"
#include "limitset/optim.hpp"

namespace limitset {

namespace {

constexpr double kXiLo = -0.95;
constexpr double kXiHi = 1.0;
constexpr double kXiMid = 0.5 * (kXiLo + kXiHi);
constexpr double kXiHalf = 0.5 * (kXiHi - kXiLo);

double xi_from_unconstrained(double phi) { return kXiMid + kXiHalf * std::tanh(phi); }
double unconstrained_from_xi(double xi) { return std::atanh((xi - kXiMid) / kXiHalf); }

} // namespace

SplineBasis::SplineBasis(int degree, std::vector<double> interior) : degree_(degree) {
    if (degree < 1 || degree > 3) throw validation_error("spline degree must be 1, 2 or 3");
    // interior knots at the boundary would exceed the clamp multiplicity
    std::erase_if(interior, [](double t) { return t == 0.0 || t == 1.0; });
    for (std::size_t i = 0; i < interior.size(); ++i) {
        if (!(interior[i] > 0.0 && interior[i] < 1.0))
            throw validation_error("interior knots must lie in (0,1)");
        if (i > 0 && !(interior[i] > interior[i - 1]))
            throw validation_error("interior knots must be strictly increasing");
    }
    interior_ = interior;
    knots_.assign(static_cast<std::size_t>(degree) + 1, 0.0);
    knots_.insert(knots_.end(), interior.begin(), interior.end());
    knots_.insert(knots_.end(), static_cast<std::size_t>(degree) + 1, 1.0);
    dim_ = static_cast<int>(knots_.size()) - degree - 1;
}

std::vector<double> SplineBasis::eval(double w) const {
    if (!(w >= 0.0 && w <= 1.0)) throw validation_error("spline argument outside [0,1]");
    const int d = degree_;
    const int m = static_cast<int>(knots_.size());

    // span index mu: largest knot index with knots_[mu] <= w, capped so the
    // right endpoint falls in the last nonzero span
    int mu = static_cast<int>(std::upper_bound(knots_.begin(), knots_.end(), w) -
                              knots_.begin()) - 1;
    mu = std::min(mu, m - d - 2);

    // triangular recursion for the d+1 nonzero functions N_{mu-d..mu}
    std::vector<double> nz(static_cast<std::size_t>(d) + 1, 0.0);
    nz[0] = 1.0;
    std::vector<double> left(static_cast<std::size_t>(d) + 1), right(left);
    for (int j = 1; j <= d; ++j) {
        left[j] = w - knots_[mu + 1 - j];
        right[j] = knots_[mu + j] - w;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double den = right[r + 1] + left[j - r];
            const double tmp = (den != 0.0) ? nz[r] / den : 0.0;
            nz[r] = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        nz[j] = saved;
    }

    std::vector<double> out(static_cast<std::size_t>(dim_), 0.0);
    for (int r = 0; r <= d; ++r) {
        const int idx = mu - d + r;
        if (idx >= 0 && idx < dim_) out[idx] = nz[r];
    }
    return out;
}

SplineBasis build_basis(int degree, int kappa, double w_min, double w_max) {
    if (degree < 1 || degree > 3) throw validation_error("spline degree must be 1, 2 or 3");
    if (kappa < degree + 1) throw validation_error("too few interior knots for the degree");
    if (kappa % 2 == 0) throw validation_error("interior knot count must be odd");
    if (!(w_min >= 0.0 && w_max <= 1.0 && w_min < w_max))
        throw validation_error("invalid angle range");

    std::vector<double> interior(static_cast<std::size_t>(kappa));
    for (int i = 0; i < kappa; ++i)
        interior[i] = w_min + (w_max - w_min) * static_cast<double>(i) /
                      static_cast<double>(kappa - 1);
    interior[static_cast<std::size_t>(kappa - 1) / 2] = 0.5;
    for (std::size_t i = 1; i < interior.size(); ++i)
        if (!(interior[i] > interior[i - 1]))
            throw validation_error("angle range must straddle 1/2");
    return SplineBasis(degree, interior);
}

double ThresholdCurve::threshold_at(double w) const {
    const std::vector<double> b = basis.eval(w);
    double s = 0;
    for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * coef[j];
    return std::exp(s);
}

double pinball_objective(const PolarSample& polar, const SplineBasis& basis,
                         const std::vector<double>& coef, double q_u) {
    double obj = 0;
    for (std::size_t i = 0; i < polar.size(); ++i) {
        const std::vector<double> b = basis.eval(polar.w[i]);
        double fit = 0;
        for (std::size_t j = 0; j < b.size(); ++j) fit += b[j] * coef[j];
        const double e = std::log(polar.r[i]) - fit;
        obj += e * (q_u - (e < 0 ? 1.0 : 0.0));
    }
    return obj;
}

ThresholdCurve fit_threshold_quantile(const PolarSample& polar, const SplineBasis& basis,
                                      double q_u) {
    if (!(q_u > 0 && q_u < 1)) throw validation_error("quantile level outside (0,1)");
    const std::size_t n = polar.size();
    const int p = basis.dim();
    if (n < static_cast<std::size_t>(p) + 1)
        throw validation_error("too few observations for the basis dimension");

    Eigen::MatrixXd B(n, p);
    Eigen::VectorXd y(n);
    double w_min = 1, w_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(polar.r[i] > 0)) throw validation_error("radii must be positive");
        const std::vector<double> row = basis.eval(polar.w[i]);
        for (int j = 0; j < p; ++j) B(i, j) = row[j];
        y(i) = std::log(polar.r[i]);
        w_min = std::min(w_min, polar.w[i]);
        w_max = std::max(w_max, polar.w[i]);
    }

    // least squares start, then iteratively reweighted fits of the smoothed
    // check loss; the weights majorise the pinball objective
    Eigen::VectorXd c = (B.transpose() * B).ldlt().solve(B.transpose() * y);
    const double eps = 1e-8 * (1.0 + y.cwiseAbs().mean());
    const Eigen::VectorXd shift = (2.0 * q_u - 1.0) * (B.transpose() * Eigen::VectorXd::Ones(n));
    for (int iter = 0; iter < 80; ++iter) {
        Eigen::VectorXd e = y - B * c;
        Eigen::VectorXd wts = (e.cwiseAbs().array() + eps).inverse().matrix();
        Eigen::MatrixXd BtWB = B.transpose() * wts.asDiagonal() * B;
        Eigen::VectorXd rhs = B.transpose() * (wts.asDiagonal() * y) + shift;
        Eigen::VectorXd c_new = BtWB.ldlt().solve(rhs);
        const double delta = (c_new - c).cwiseAbs().maxCoeff();
        c = c_new;
        if (delta < 1e-10 * (1.0 + c.cwiseAbs().maxCoeff())) break;
    }

    ThresholdCurve out;
    out.basis = basis;
    out.coef.assign(c.data(), c.data() + p);
    out.q_u = q_u;
    out.w_min = w_min;
    out.w_max = w_max;
    return out;
}

double SplineSurface::scale_at(double w) const {
    const std::vector<double> b = basis.eval(w);
    double s = 0;
    for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * logscale_coef[j];
    return std::exp(s);
}

SplineSurface fit_gpd_gam(const PolarSample& polar, const ThresholdCurve& threshold,
                          const SplineBasis& basis) {
    const int p = basis.dim();
    std::vector<std::vector<double>> rows;
    std::vector<double> z;
    double w_min = 1, w_max = 0;
    for (std::size_t i = 0; i < polar.size(); ++i) {
        const double u = threshold.threshold_at(polar.w[i]);
        const double excess = polar.r[i] - u;
        if (excess > 0) {
            rows.push_back(basis.eval(polar.w[i]));
            z.push_back(excess);
        }
        w_min = std::min(w_min, polar.w[i]);
        w_max = std::max(w_max, polar.w[i]);
    }
    const std::size_t ne = z.size();
    if (ne < static_cast<std::size_t>(p) + 2)
        throw numerical_error("too few threshold exceedances for the tail surface");

    // constant-scale fit provides the starting point, which guarantees the
    // spline surface never ends up worse than a single tail fit
    GpdFit flat = fit_gpd_mle(z, 0.0, threshold.q_u);

    auto fg = [&](const std::vector<double>& th, std::vector<double>& grad) {
        const double xi = xi_from_unconstrained(th[p]);
        double nll = 0;
        std::fill(grad.begin(), grad.end(), 0.0);
        double dxi_sum = 0;
        for (std::size_t i = 0; i < ne; ++i) {
            double ls = 0;
            for (int j = 0; j < p; ++j) ls += rows[i][j] * th[j];
            const double t = z[i] * std::exp(-ls);
            double dls; // d nll_i / d log sigma_i
            if (std::abs(xi) < 1e-5) {
                nll += ls + t + xi * (t - 0.5 * t * t);
                dls = 1.0 - t - xi * (t - t * t);
                dxi_sum += t - 0.5 * t * t + xi * (2.0 * t * t * t / 3.0 - t * t);
            } else {
                const double arg = 1.0 + xi * t;
                if (arg <= 0) return std::numeric_limits<double>::infinity();
                nll += ls + (1.0 + 1.0 / xi) * std::log(arg);
                dls = 1.0 - (1.0 + xi) * t / arg;
                dxi_sum += -std::log(arg) / (xi * xi) + (1.0 + 1.0 / xi) * t / arg;
            }
            for (int j = 0; j < p; ++j) grad[j] += rows[i][j] * dls;
        }
        const double th_p = th[p];
        const double sech2 = 1.0 - std::tanh(th_p) * std::tanh(th_p);
        grad[p] = dxi_sum * kXiHalf * sech2;
        return nll;
    };

    std::vector<double> th0(static_cast<std::size_t>(p) + 1, std::log(flat.sigma));
    th0[p] = unconstrained_from_xi(flat.xi);
    OptimResult r = bfgs(fg, th0, 1e-6 * (1.0 + static_cast<double>(ne)));
    if (!std::isfinite(r.f)) throw numerical_error("tail surface likelihood diverged");

    SplineSurface out;
    out.basis = basis;
    out.threshold = threshold;
    out.logscale_coef.assign(r.x.begin(), r.x.begin() + p);
    out.xi = xi_from_unconstrained(r.x[p]);
    out.w_min = w_min;
    out.w_max = w_max;
    out.nll = r.f;
    out.n_exceedances = ne;
    return out;
}

std::optional<double> predict_radial_quantile(const SplineSurface& surface, double w, double q) {
    if (w < surface.w_min || w > surface.w_max) return std::nullopt;
    GpdFit fit;
    fit.u = surface.threshold.threshold_at(w);
    fit.sigma = surface.scale_at(w);
    fit.xi = surface.xi;
    fit.zeta_u = surface.threshold.q_u;
    return radial_quantile(fit, q);
}

} // namespace limitset
