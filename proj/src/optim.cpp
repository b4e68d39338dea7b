#include "limitset/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace limitset {

OptimResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                        std::vector<double> x0, const std::vector<double>& step,
                        double ftol, int max_iter) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    std::vector<std::size_t> idx(n + 1);
    OptimResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = idx[0], worst = idx[n], second = idx[n - 1];

        if (std::abs(fv[worst] - fv[best]) <= ftol * (std::abs(fv[best]) + ftol)) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j)
                p[j] = centroid[j] + t * (pts[worst][j] - centroid[j]);
            return p;
        };

        std::vector<double> refl = blend(-1.0);
        const double f_refl = f(refl);
        if (f_refl < fv[best]) {
            std::vector<double> expa = blend(-2.0);
            const double f_expa = f(expa);
            if (f_expa < f_refl) { pts[worst] = std::move(expa); fv[worst] = f_expa; }
            else                 { pts[worst] = std::move(refl); fv[worst] = f_refl; }
        } else if (f_refl < fv[second]) {
            pts[worst] = std::move(refl);
            fv[worst] = f_refl;
        } else {
            const bool outside = f_refl < fv[worst];
            std::vector<double> contr = blend(outside ? -0.5 : 0.5);
            const double f_contr = f(contr);
            if (f_contr < std::min(f_refl, fv[worst])) {
                pts[worst] = std::move(contr);
                fv[worst] = f_contr;
            } else {
                // shrink towards the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.f = fv[best];
    res.iterations = iter;
    return res;
}

OptimResult bfgs(const std::function<double(const std::vector<double>&, std::vector<double>&)>& fg,
                 std::vector<double> x0, double gtol, int max_iter) {
    const std::size_t n = x0.size();
    std::vector<double> g(n), g_new(n), d(n), x_new(n), s(n), y(n);
    std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) H[i][i] = 1.0;

    double fx = fg(x0, g);
    OptimResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        double gnorm = 0;
        for (double gi : g) gnorm = std::max(gnorm, std::abs(gi));
        if (gnorm < gtol) { res.converged = true; break; }

        for (std::size_t i = 0; i < n; ++i) {
            double di = 0;
            for (std::size_t j = 0; j < n; ++j) di += H[i][j] * g[j];
            d[i] = -di;
        }
        double slope = std::inner_product(d.begin(), d.end(), g.begin(), 0.0);
        if (slope >= 0) { // reset to steepest descent
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) H[i][j] = (i == j) ? 1.0 : 0.0;
                d[i] = -g[i];
            }
            slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
        }

        double alpha = 1.0;
        double f_new = std::numeric_limits<double>::infinity();
        bool ok = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = x0[i] + alpha * d[i];
            f_new = fg(x_new, g_new);
            if (std::isfinite(f_new) && f_new <= fx + 1e-4 * alpha * slope) { ok = true; break; }
            alpha *= 0.5;
        }
        if (!ok) break; // no admissible step, accept current point

        double step_len = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - x0[i];
            y[i] = g_new[i] - g[i];
            step_len = std::max(step_len, std::abs(s[i]));
        }
        const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
        if (sy > 1e-12) {
            // BFGS inverse update, H <- (I - rho s y') H (I - rho y s') + rho s s'
            const double rho = 1.0 / sy;
            std::vector<double> Hy(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) Hy[i] += H[i][j] * y[j];
            const double yHy = std::inner_product(y.begin(), y.end(), Hy.begin(), 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    H[i][j] += rho * rho * (yHy + sy) * s[i] * s[j] -
                               rho * (Hy[i] * s[j] + s[i] * Hy[j]);
        }

        x0 = x_new;
        g = g_new;
        const double df = std::abs(fx - f_new);
        fx = f_new;
        if (step_len < 1e-13 && df < 1e-13) { res.converged = true; ++iter; break; }
    }
    res.x = x0;
    res.f = fx;
    res.iterations = iter;
    return res;
}

double golden_section(const std::function<double(double)>& f, double a, double b, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace limitset
