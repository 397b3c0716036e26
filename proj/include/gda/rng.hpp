#pragma once

#include <cstdint>
#include <random>

namespace gda {

// Deterministic random stream. The engine is std::mt19937_64, whose output is
// pinned by the C++ standard, and every distribution below is sampled by a
// fixed, documented recipe built only on that output. Equal seeds therefore
// reproduce equal draw sequences on any conforming toolchain.
//
// Draw costs (engine outputs consumed per call):
//   uniform01 / uniform_in / uniform_int / exponential : 1
//   normal                                             : 2 (no caching)
//   poisson, lambda < 30  (CDF inversion)              : 1
//   poisson, lambda >= 30 (rounded normal, negatives
//                          rejected and redrawn)       : 2 per attempt
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits: (u64 >> 11) * 2^-53.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer in [lo, hi], both inclusive: floor of a scaled uniform,
    // clamped at hi for the top edge.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Exponential(1) via inversion: -log1p(-u), u in [0, 1).
    double exponential() { return -std::log1p(-uniform01()); }

    // Standard normal via the Box-Muller cosine branch:
    //   sqrt(-2 ln(1 - u1)) * cos(2 pi u2)
    double normal();

    // Poisson(lambda). lambda < 30: sequential CDF inversion from a single
    // uniform. lambda >= 30: round(lambda + sqrt(lambda) * normal()),
    // redrawing negatives.
    std::int64_t poisson(double lambda);

private:
    std::mt19937_64 engine_;
};

// Derived seed for sub-streams and replications:
//   splitmix64_mix(base + (index + 1) * 0x9E3779B97F4A7C15)
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Fixed indices for the sub-streams derived from a scenario seed.
namespace seed_index {
inline constexpr std::uint64_t ratio = 0;         // allocation-ratio generation
inline constexpr std::uint64_t policy = 1;        // RANDOM scheduler draws
inline constexpr std::uint64_t observations = 2;  // per-slot observation draws
inline constexpr std::uint64_t replication = 16;  // replication r -> index 16 + r
}  // namespace seed_index

}  // namespace gda
