#pragma once

#include <functional>
#include <vector>

namespace limitset {

struct OptimResult {
    std::vector<double> x;
    double f = 0;
    int iterations = 0;
    bool converged = false;
};

// Derivative-free simplex search. step gives the initial simplex edge per
// coordinate. Deterministic: no randomised restarts.
OptimResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                        std::vector<double> x0, const std::vector<double>& step,
                        double ftol = 1e-10, int max_iter = 600);

// Quasi-Newton minimiser with Armijo backtracking. fg must return the
// objective and fill grad. Stops on gradient norm or step stagnation.
OptimResult bfgs(const std::function<double(const std::vector<double>&, std::vector<double>&)>& fg,
                 std::vector<double> x0, double gtol = 1e-7, int max_iter = 400);

// Golden-section minimum of a unimodal function on [a, b].
double golden_section(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-9);

} // namespace limitset
