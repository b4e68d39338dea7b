#pragma once

#include <stdexcept>
#include <string>

namespace limitset {

// Invalid or inconsistent input data (bad CSV, non-finite values,
// parameter out of range). Maps to exit code 3 in the CLI.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical routine failed to produce a usable result (optimizer
// divergence, degenerate likelihood). Maps to exit code 4 in the CLI.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace limitset
