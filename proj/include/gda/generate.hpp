#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gda/rng.hpp"
#include "gda/types.hpp"

namespace gda {

enum class ArrivalKind { poisson };

struct ArrivalSpec {
    ArrivalKind kind = ArrivalKind::poisson;
    std::vector<double> rate_per_slot;  // K, jobs per slot; draws clamp at arrival_bound
};

enum class ServiceKind { uniform_integer, truncated_poisson };

struct ServiceSpec {
    ServiceKind kind = ServiceKind::uniform_integer;
    Matrix lo;    // N x K, uniform_integer band floor
    Matrix hi;    // N x K, uniform_integer band ceiling, <= service_bound
    Matrix rate;  // N x K, truncated_poisson rate; draws clamp at service_bound
};

enum class PueKind { constant, sinusoidal_diurnal, file };

struct PueSpec {
    PueKind kind = PueKind::constant;
    std::vector<double> value;        // constant: N, each >= 1
    std::vector<double> base;         // sinusoidal: N midpoints
    std::vector<double> amplitude;    // sinusoidal: N, base - amplitude >= 1
    std::vector<double> phase_slots;  // sinusoidal: N phase offsets
    int period_slots = 288;           // sinusoidal: diurnal period
    std::string path;                 // file: CSV trace, cycled past its end
};

enum class PriceKind { constant, step_schedule, file };

struct PriceSpec {
    PriceKind kind = PriceKind::constant;
    std::vector<double> value;                // constant: N, each >= 0
    std::vector<std::vector<double>> levels;  // step_schedule: per-DC level cycle
    int slots_per_step = 1;                   // step_schedule: slots each level holds
    std::string path;                         // file: CSV trace, cycled past its end
};

enum class RatioKind { dataset_proportional, dirichlet_random, file };

struct RatioSpec {
    RatioKind kind = RatioKind::dataset_proportional;
    std::string path;  // file: JSON document holding K N x N row arrays
};

struct GeneratorSpec {
    ArrivalSpec arrival;
    ServiceSpec service;
    PueSpec pue;
    PriceSpec price;
    // Absent means the config's inline allocation_ratio is used untouched.
    std::optional<RatioSpec> ratio;
    std::uint64_t seed = 0;
};

class GeneratorError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

ValidationResult validate_generator(const GeneratorSpec& spec, const SystemConfig& config);

// Deterministic given spec.seed. Draw order per slot: arrivals by type, then
// service rates row-major by (DC, type). PUE and price sources are
// deterministic and consume no randomness. Every emitted observation passes
// validate_observation against the config.
std::vector<SlotObservation> generate_observations(const GeneratorSpec& spec,
                                                   const SystemConfig& config, int horizon);

// K row-stochastic N x N tensors per spec.ratio (which must be present).
std::vector<Matrix> generate_ratios(const GeneratorSpec& spec, const SystemConfig& config);

}  // namespace gda
