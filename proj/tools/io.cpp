#include "io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "limitset/errors.hpp"

namespace limitset::cli {

namespace {

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

// One row of exactly n comma-separated numbers; empty return means the
// row is malformed.
bool parse_row(const std::string& line, std::size_t n, std::vector<double>& out) {
    out.clear();
    std::size_t pos = 0;
    for (std::size_t field = 0; field < n; ++field) {
        const std::size_t end = line.find(',', pos);
        if ((end == std::string::npos) != (field == n - 1)) return false;
        const std::string cell =
            strip(line.substr(pos, end == std::string::npos ? end : end - pos));
        if (cell.empty()) return false;
        errno = 0;
        char* tail = nullptr;
        const double v = std::strtod(cell.c_str(), &tail);
        if (errno != 0 || tail != cell.c_str() + cell.size()) return false;
        out.push_back(v);
        pos = end + 1;
    }
    return true;
}

} // namespace

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

RawSample read_two_column_csv(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    RawSample raw;
    std::string line;
    std::size_t lineno = 0;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && skip_header) continue;
        if (!parse_row(line, 2, row))
            throw validation_error(path + ": line " + std::to_string(lineno) +
                                   ": expected two numeric columns");
        raw.y1.push_back(row[0]);
        raw.y2.push_back(row[1]);
    }
    if (raw.y1.empty()) throw validation_error(path + ": no data rows");
    return raw;
}

BoundaryPoints read_boundary_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    BoundaryPoints b;
    std::string line;
    std::size_t lineno = 0;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && strip(line) == "w,x1,x2") continue;
        if (!parse_row(line, 3, row))
            throw validation_error(path + ": line " + std::to_string(lineno) +
                                   ": expected three numeric columns (w, x1, x2)");
        if (!(std::isfinite(row[0]) && std::isfinite(row[1]) && std::isfinite(row[2])))
            throw validation_error(path + ": line " + std::to_string(lineno) +
                                   ": non-finite value");
        if (row[0] < 0 || row[0] > 1)
            throw validation_error(path + ": line " + std::to_string(lineno) +
                                   ": angle outside [0, 1]");
        if (row[1] < 0 || row[1] > 1 || row[2] < 0 || row[2] > 1)
            throw validation_error(path + ": line " + std::to_string(lineno) +
                                   ": coordinate outside the unit square");
        b.w.push_back(row[0]);
        b.x1.push_back(row[1]);
        b.x2.push_back(row[2]);
    }
    if (b.w.empty()) throw validation_error(path + ": no boundary points");
    return b;
}

void write_sample_csv(const std::string& path, const BivariateSample& sample) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    for (std::size_t i = 0; i < sample.x1.size(); ++i)
        out << fmt(sample.x1[i]) << ',' << fmt(sample.x2[i]) << '\n';
}

void write_boundary_csv(const std::string& path, const BoundaryPoints& boundary) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << "w,x1,x2\n";
    for (std::size_t i = 0; i < boundary.size(); ++i)
        out << fmt(boundary.w[i]) << ',' << fmt(boundary.x1[i]) << ','
            << fmt(boundary.x2[i]) << '\n';
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t end = text.find(':', pos);
        if ((end == std::string::npos) != (i == 2))
            throw validation_error("grid must look like start:end:step, got " + text);
        const std::string cell =
            text.substr(pos, end == std::string::npos ? end : end - pos);
        errno = 0;
        char* tail = nullptr;
        const double v = std::strtod(cell.c_str(), &tail);
        if (cell.empty() || errno != 0 || tail != cell.c_str() + cell.size())
            throw validation_error("grid must look like start:end:step, got " + text);
        parts.push_back(v);
        pos = end + 1;
    }
    const double start = parts[0], end = parts[1], step = parts[2];
    if (!(step > 0) || start < 0 || end > 1 || start > end)
        throw validation_error("grid needs 0 <= start <= end <= 1 and step > 0");
    std::vector<double> grid;
    const double count = std::floor((end - start) / step + 1e-9);
    for (double i = 0; i <= count; ++i) grid.push_back(start + i * step);
    return grid;
}

std::string resolve_out(const std::string& dir, const std::string& path) {
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / p).string();
}

} // namespace limitset::cli
