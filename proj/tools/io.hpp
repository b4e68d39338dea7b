#pragma once

#include <string>
#include <vector>

#include "limitset/types.hpp"

namespace limitset::cli {

// Shortest decimal representation that round-trips the double exactly,
// so written files re-read bit for bit and reruns are byte-identical.
std::string fmt(double v);

// Two numeric columns, comma separated. Parse problems name the file and
// the 1-based line.
RawSample read_two_column_csv(const std::string& path, bool skip_header);

// Boundary rows (w, x1, x2); a leading "w,x1,x2" header line is
// recognised and skipped. Validates the limit-set invariants: finite
// values, w in [0, 1], coordinates in [0, 1].
BoundaryPoints read_boundary_csv(const std::string& path);

void write_sample_csv(const std::string& path, const BivariateSample& sample);
void write_boundary_csv(const std::string& path, const BoundaryPoints& boundary);

// "start:end:step" with 0 <= start <= end <= 1 and step > 0, endpoints
// included when the step lands on them.
std::vector<double> parse_grid(const std::string& text);

// Relative paths land inside dir (created on demand); absolute paths are
// returned unchanged.
std::string resolve_out(const std::string& dir, const std::string& path);

} // namespace limitset::cli
