#include "limitset/margins.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "limitset/errors.hpp"

namespace limitset {

namespace {

// Average ranks, 1-based; ties share the mean of the ranks they span.
std::vector<double> average_ranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });

    std::vector<double> rank(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) rank[order[t]] = avg;
        i = j + 1;
    }
    return rank;
}

void check_finite(const std::vector<double>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]))
            throw validation_error(std::string("non-finite value in column ") + name +
                                   " at row " + std::to_string(i + 1));
    }
}

} // namespace

BivariateSample to_exponential_margins(const RawSample& raw) {
    if (raw.y1.size() != raw.y2.size())
        throw validation_error("columns have different lengths");
    if (raw.y1.empty()) throw validation_error("empty sample");
    check_finite(raw.y1, "1");
    check_finite(raw.y2, "2");

    const double np1 = static_cast<double>(raw.size()) + 1.0;
    BivariateSample out;
    out.x1.reserve(raw.size());
    out.x2.reserve(raw.size());
    for (double r : average_ranks(raw.y1)) out.x1.push_back(-std::log1p(-r / np1));
    for (double r : average_ranks(raw.y2)) out.x2.push_back(-std::log1p(-r / np1));
    return out;
}

PolarSample to_polar(const BivariateSample& sample) {
    if (sample.x1.size() != sample.x2.size())
        throw validation_error("columns have different lengths");
    PolarSample out;
    out.r.reserve(sample.size());
    out.w.reserve(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double a = sample.x1[i];
        const double b = sample.x2[i];
        if (!(a >= 0) || !(b >= 0))
            throw validation_error("negative coordinate at row " + std::to_string(i + 1));
        const double r = a + b;
        if (!(r > 0))
            throw validation_error("zero radius at row " + std::to_string(i + 1));
        out.r.push_back(r);
        out.w.push_back(a / r);
    }
    return out;
}

BivariateSample from_polar(const PolarSample& polar) {
    BivariateSample out;
    out.x1.reserve(polar.size());
    out.x2.reserve(polar.size());
    for (std::size_t i = 0; i < polar.size(); ++i) {
        out.x1.push_back(polar.r[i] * polar.w[i]);
        out.x2.push_back(polar.r[i] * (1.0 - polar.w[i]));
    }
    return out;
}

double empirical_quantile(std::vector<double> values, double p) {
    if (values.empty()) throw validation_error("quantile of empty set");
    if (!(p >= 0.0 && p <= 1.0)) throw validation_error("quantile level outside [0,1]");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const double h = (static_cast<double>(n) - 1.0) * p;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return values[n - 1];
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

} // namespace limitset
