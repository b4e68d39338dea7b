#include "limitset/copulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "limitset/errors.hpp"
#include "limitset/rng.hpp"

namespace limitset {

namespace {

// Exponential margin from a standard normal coordinate,
// x = -log(1 - Phi(z)), with an asymptotic fallback once the survivor
// function underflows.
double exp_margin_from_normal(double z) {
    const double tail = 0.5 * std::erfc(z / M_SQRT2);
    if (tail > 0) return -std::log(tail);
    return 0.5 * z * z + std::log(z) + 0.5 * std::log(2.0 * M_PI);
}

// Positive stable variate with Laplace transform exp(-t^gamma),
// Chambers-Mallows-Stuck construction.
double positive_stable(Rng& rng, double gamma) {
    const double theta = M_PI * rng.uniform();
    const double w = rng.exponential();
    const double a = std::sin(gamma * theta);
    const double b = std::sin((1.0 - gamma) * theta);
    const double s = std::sin(theta);
    return a * std::pow(b, (1.0 - gamma) / gamma) /
           std::pow(s, 1.0 / gamma) * std::pow(w, -(1.0 - gamma) / gamma);
}

// x = -log(1 - exp(-s)) for s > 0, stable at both ends.
double exp_margin_from_neglog(double s) { return -std::log(-std::expm1(-s)); }

} // namespace

CopulaSpec CopulaSpec::gaussian(double rho) {
    CopulaSpec s;
    s.family = CopulaFamily::gaussian;
    s.rho = rho;
    s.validate();
    return s;
}

CopulaSpec CopulaSpec::logistic(double gamma) {
    CopulaSpec s;
    s.family = CopulaFamily::logistic;
    s.gamma = gamma;
    s.validate();
    return s;
}

CopulaSpec CopulaSpec::inverted_logistic(double gamma) {
    CopulaSpec s;
    s.family = CopulaFamily::inverted_logistic;
    s.gamma = gamma;
    s.validate();
    return s;
}

CopulaSpec CopulaSpec::asymmetric_logistic(double gamma, double theta1, double theta2) {
    CopulaSpec s;
    s.family = CopulaFamily::asymmetric_logistic;
    s.gamma = gamma;
    s.theta1 = theta1;
    s.theta2 = theta2;
    s.validate();
    return s;
}

void CopulaSpec::validate() const {
    switch (family) {
    case CopulaFamily::gaussian:
        if (!(rho >= 0 && rho < 1))
            throw validation_error("gaussian correlation must lie in [0,1)");
        break;
    case CopulaFamily::logistic:
    case CopulaFamily::inverted_logistic:
        if (!(gamma > 0 && gamma < 1))
            throw validation_error("logistic dependence parameter must lie in (0,1)");
        break;
    case CopulaFamily::asymmetric_logistic:
        if (!(gamma > 0 && gamma < 1))
            throw validation_error("logistic dependence parameter must lie in (0,1)");
        if (!(theta1 > 0 && theta1 < 1) || !(theta2 > 0 && theta2 < 1))
            throw validation_error("asymmetry parameters must lie in (0,1)");
        break;
    }
}

std::string CopulaSpec::name() const {
    switch (family) {
    case CopulaFamily::gaussian: return "gaussian";
    case CopulaFamily::logistic: return "logistic";
    case CopulaFamily::inverted_logistic: return "inverted-logistic";
    case CopulaFamily::asymmetric_logistic: return "asymmetric-logistic";
    }
    return "unknown";
}

BivariateSample sample_copula(const CopulaSpec& spec, std::size_t n, std::uint64_t seed) {
    spec.validate();
    Rng rng(seed);
    BivariateSample out;
    out.x1.reserve(n);
    out.x2.reserve(n);

    switch (spec.family) {
    case CopulaFamily::gaussian: {
        const double rho = spec.rho;
        const double orth = std::sqrt(1.0 - rho * rho);
        for (std::size_t i = 0; i < n; ++i) {
            double z1, z2;
            rng.normal_pair(z1, z2);
            out.x1.push_back(exp_margin_from_normal(z1));
            out.x2.push_back(exp_margin_from_normal(rho * z1 + orth * z2));
        }
        break;
    }
    case CopulaFamily::logistic: {
        for (std::size_t i = 0; i < n; ++i) {
            const double s = positive_stable(rng, spec.gamma);
            const double t1 = std::pow(rng.exponential() / s, spec.gamma);
            const double t2 = std::pow(rng.exponential() / s, spec.gamma);
            out.x1.push_back(exp_margin_from_neglog(t1));
            out.x2.push_back(exp_margin_from_neglog(t2));
        }
        break;
    }
    case CopulaFamily::inverted_logistic: {
        // Survival copula of the logistic family; on this construction the
        // exponential margin is the transformed variable itself.
        for (std::size_t i = 0; i < n; ++i) {
            const double s = positive_stable(rng, spec.gamma);
            out.x1.push_back(std::pow(rng.exponential() / s, spec.gamma));
            out.x2.push_back(std::pow(rng.exponential() / s, spec.gamma));
        }
        break;
    }
    case CopulaFamily::asymmetric_logistic: {
        // Max-mixture on Frechet scale: a logistic pair carrying weight
        // 1-theta_i against an independent pair carrying weight theta_i.
        for (std::size_t i = 0; i < n; ++i) {
            const double s = positive_stable(rng, spec.gamma);
            const double t1 = std::pow(rng.exponential() / s, spec.gamma);
            const double t2 = std::pow(rng.exponential() / s, spec.gamma);
            const double z1 = 1.0 / t1; // unit Frechet with logistic dependence
            const double z2 = 1.0 / t2;
            const double f1 = 1.0 / rng.exponential(); // independent unit Frechet
            const double f2 = 1.0 / rng.exponential();
            const double y1 = std::max((1.0 - spec.theta1) * z1, spec.theta1 * f1);
            const double y2 = std::max((1.0 - spec.theta2) * z2, spec.theta2 * f2);
            out.x1.push_back(exp_margin_from_neglog(1.0 / y1));
            out.x2.push_back(exp_margin_from_neglog(1.0 / y2));
        }
        break;
    }
    }
    return out;
}

double gauge(const CopulaSpec& spec, double x1, double x2) {
    spec.validate();
    if (!(x1 >= 0) || !(x2 >= 0)) throw validation_error("gauge arguments must be nonnegative");
    const double mx = std::max(x1, x2);
    const double mn = std::min(x1, x2);
    switch (spec.family) {
    case CopulaFamily::gaussian: {
        if (spec.rho == 0) return x1 + x2;
        return (x1 + x2 - 2.0 * spec.rho * std::sqrt(x1 * x2)) / (1.0 - spec.rho * spec.rho);
    }
    case CopulaFamily::inverted_logistic: {
        const double g = spec.gamma;
        return std::pow(std::pow(x1, 1.0 / g) + std::pow(x2, 1.0 / g), g);
    }
    case CopulaFamily::logistic: {
        const double g = spec.gamma;
        return mx / g - (1.0 / g - 1.0) * mn;
    }
    case CopulaFamily::asymmetric_logistic: {
        const double g = spec.gamma;
        return std::min(x1 + x2, mx / g - (1.0 / g - 1.0) * mn);
    }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

namespace {

// Ray angles where the gauge switches branch. The boundary has corners
// there, and the argmax-style measures need those points sampled exactly.
std::vector<double> kink_angles(const CopulaSpec& spec) {
    switch (spec.family) {
    case CopulaFamily::logistic: return {0.5};
    case CopulaFamily::asymmetric_logistic: {
        const double c = (1.0 - spec.gamma) / (2.0 - spec.gamma);
        return {c, 0.5, 1.0 - c};
    }
    default: return {};
    }
}

} // namespace

BoundaryPoints true_boundary(const CopulaSpec& spec, std::size_t k) {
    spec.validate();
    if (k < 2) throw validation_error("boundary grid needs at least two angles");
    std::vector<double> ws(k);
    for (std::size_t j = 0; j < k; ++j)
        ws[j] = static_cast<double>(j) / static_cast<double>(k - 1);
    if (k >= 3) {
        // Snap the nearest interior grid angle onto each kink. Each angle
        // moves by at most half a step, so the grid stays strictly increasing.
        std::size_t last = 0;
        for (double w : kink_angles(spec)) {
            std::size_t j = static_cast<std::size_t>(
                std::llround(w * static_cast<double>(k - 1)));
            j = std::max<std::size_t>(1, std::min(j, k - 2));
            if (last != 0 && j <= last) continue;
            ws[j] = w;
            last = j;
        }
    }
    BoundaryPoints b;
    b.w.reserve(k);
    b.x1.reserve(k);
    b.x2.reserve(k);
    for (double w : ws) {
        const double r = 1.0 / gauge(spec, w, 1.0 - w);
        b.w.push_back(w);
        b.x1.push_back(r * w);
        b.x2.push_back(r * (1.0 - w));
    }
    return b;
}

namespace {

double true_eta(const CopulaSpec& s) {
    switch (s.family) {
    case CopulaFamily::gaussian: return 0.5 * (1.0 + s.rho);
    case CopulaFamily::inverted_logistic: return std::pow(2.0, -s.gamma);
    case CopulaFamily::logistic:
    case CopulaFamily::asymmetric_logistic: return 1.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double true_lambda(const CopulaSpec& s, double w) {
    const double mx = std::max(w, 1.0 - w);
    switch (s.family) {
    case CopulaFamily::gaussian: {
        if (s.rho == 0) return 1.0;
        const double t = (mx > 0) ? std::min(w, 1.0 - w) / mx : 0.0;
        if (t >= s.rho * s.rho)
            return (1.0 - 2.0 * s.rho * std::sqrt(w * (1.0 - w))) / (1.0 - s.rho * s.rho);
        return mx;
    }
    case CopulaFamily::inverted_logistic:
        return std::pow(std::pow(w, 1.0 / s.gamma) + std::pow(1.0 - w, 1.0 / s.gamma), s.gamma);
    case CopulaFamily::logistic:
    case CopulaFamily::asymmetric_logistic:
        return mx;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double true_tau(const CopulaSpec& s, double delta) {
    switch (s.family) {
    case CopulaFamily::gaussian:
        if (delta >= s.rho * s.rho) return 1.0;
        return (1.0 - s.rho * s.rho) / (1.0 + delta - 2.0 * s.rho * std::sqrt(delta));
    case CopulaFamily::inverted_logistic:
    case CopulaFamily::asymmetric_logistic:
        return 1.0;
    case CopulaFamily::logistic:
        return s.gamma / (1.0 + s.gamma * delta - delta);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double true_alpha(const CopulaSpec& s) {
    switch (s.family) {
    case CopulaFamily::gaussian: return s.rho * s.rho;
    case CopulaFamily::inverted_logistic: return 0.0;
    case CopulaFamily::logistic:
    case CopulaFamily::asymmetric_logistic: return 1.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double true_beta(const CopulaSpec& s) {
    switch (s.family) {
    case CopulaFamily::gaussian: return 0.5;
    case CopulaFamily::inverted_logistic: return 1.0 - s.gamma;
    case CopulaFamily::logistic:
    case CopulaFamily::asymmetric_logistic: return 0.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double true_chi(const CopulaSpec& s) {
    switch (s.family) {
    case CopulaFamily::gaussian:
    case CopulaFamily::inverted_logistic:
        return 0.0;
    case CopulaFamily::logistic:
        return 2.0 - std::pow(2.0, s.gamma);
    case CopulaFamily::asymmetric_logistic: {
        const double a = std::pow(1.0 - s.theta1, 1.0 / s.gamma);
        const double b = std::pow(1.0 - s.theta2, 1.0 / s.gamma);
        return 2.0 - s.theta1 - s.theta2 - std::pow(a + b, s.gamma);
    }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace

DependenceSummary true_measures(const CopulaSpec& spec,
                                const std::vector<double>& omega_grid,
                                const std::vector<double>& delta_grid) {
    spec.validate();
    DependenceSummary out;
    out.eta = true_eta(spec);
    out.omega_grid = omega_grid;
    out.lambda.reserve(omega_grid.size());
    for (double w : omega_grid) {
        if (!(w >= 0 && w <= 1)) throw validation_error("omega outside [0,1]");
        out.lambda.push_back(true_lambda(spec, w));
    }
    for (double d : delta_grid) {
        if (!(d > 0 && d <= 1)) throw validation_error("delta outside (0,1]");
        out.tau1.delta.push_back(d);
        out.tau1.value.push_back(true_tau(spec, d));
        out.tau1.estimable.push_back(true);
    }
    out.tau2 = out.tau1; // every family here has an exchangeable gauge
    out.alpha1 = out.alpha2 = true_alpha(spec);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.beta1 = NormalTailFit{true_beta(spec), nan, nan};
    out.beta2 = out.beta1;
    out.chi = true_chi(spec);
    return out;
}

} // namespace limitset
