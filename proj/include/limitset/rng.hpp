#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace limitset {

// Deterministic random source. All variate transforms are written out
// explicitly instead of going through std:: distributions, whose output
// is implementation defined; a given seed must reproduce the same stream
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on the open interval (0, 1); safe to pass to log().
    double uniform() {
        const std::uint64_t bits = gen_() >> 11; // top 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    double exponential() { return -std::log(uniform()); }

    // Standard normal pair, Box-Muller.
    void normal_pair(double& z1, double& z2) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * M_PI * u2;
        z1 = rad * std::cos(ang);
        z2 = rad * std::sin(ang);
    }

    double normal() {
        double z1, z2;
        normal_pair(z1, z2);
        return z1;
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// Stream seed for substream `index` of a root seed. SplitMix64 step, so
// replicate k gets the same stream no matter how work is scheduled.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t z = root + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace limitset
