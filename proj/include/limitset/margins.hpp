#pragma once

#include "limitset/types.hpp"

namespace limitset {

/* Rank transform to standard exponential margins,
 *     x = -log(1 - rank / (n + 1)),
 * with average ranks for ties. Strictly monotone in each coordinate, so
 * the transformed cloud depends on the input only through its ranks.
 * Throws validation_error on non-finite input (message carries the first
 * offending row, 1-based). */
BivariateSample to_exponential_margins(const RawSample& raw);

/* Pseudo-polar coordinates r = x1 + x2, w = x1 / r. Requires x1, x2 >= 0
 * and r > 0 for every row. */
PolarSample to_polar(const BivariateSample& sample);

/* Inverse of to_polar. */
BivariateSample from_polar(const PolarSample& polar);

// Empirical quantile with linear interpolation between order statistics
// (the convention statistical software calls type 7). p in [0, 1].
double empirical_quantile(std::vector<double> values, double p);

} // namespace limitset
