#include "gda/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gda {

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
    const double span = static_cast<double>(hi - lo) + 1.0;
    const auto offset = static_cast<std::int64_t>(uniform01() * span);
    return std::min(lo + offset, hi);
}

double RandomStream::normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::int64_t RandomStream::poisson(double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("poisson: lambda must be >= 0");
    if (lambda == 0.0) return 0;

    if (lambda < 30.0) {
        // Sequential search through the CDF; one uniform per draw.
        const double u = uniform01();
        double p = std::exp(-lambda);
        double cdf = p;
        std::int64_t x = 0;
        const auto cap = static_cast<std::int64_t>(lambda + 100.0 * std::sqrt(lambda) + 100.0);
        while (u > cdf && x < cap) {
            ++x;
            p *= lambda / static_cast<double>(x);
            cdf += p;
        }
        return x;
    }

    // Rounded normal approximation with continuity correction; negative
    // candidates are rejected and redrawn.
    const double sigma = std::sqrt(lambda);
    for (;;) {
        const double candidate = std::floor(lambda + sigma * normal() + 0.5);
        if (candidate >= 0.0) return static_cast<std::int64_t>(candidate);
    }
}

namespace {

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64_mix(base + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace gda
