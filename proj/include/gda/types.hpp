#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gda/matrix.hpp"

namespace gda {

// Absolute tolerance for every row/column stochasticity check. Double
// accumulation over <= ~100 terms stays well inside this.
inline constexpr double kSumTolerance = 1e-9;

// Static description of the system: N data centers, K job types, and the
// per-type parameters that do not change from slot to slot.
struct SystemConfig {
    int num_dcs = 0;        // N
    int num_job_types = 0;  // K

    std::vector<std::string> dc_ids;       // N opaque labels
    std::vector<double> it_power_per_job;  // K, watts per job (slot-normalized)
    std::vector<double> arrival_bound;     // K, max jobs arriving per slot
    std::vector<double> service_bound;     // K, max jobs served per slot per DC

    // K tensors of shape N x N. Entry (i, j) of tensor k is the fraction of
    // type-k tasks sent to DC j when DC i acts as global manager. Rows sum
    // to 1.
    std::vector<Matrix> allocation_ratio;

    // K vectors of length N: fraction of type-k data held at each DC. Each
    // vector sums to 1.
    std::vector<std::vector<double>> dataset_distribution;
};

// Everything random the system sees in one slot.
struct SlotObservation {
    std::int64_t slot_index = 0;
    std::vector<double> arrivals;      // K, jobs arriving this slot
    Matrix service_rates;              // N x K, jobs DC i can finish as manager
    std::vector<double> pue;           // N, dimensionless >= 1
    std::vector<double> price_weight;  // N, cost per unit energy at the DC's location
};

// Unfinished-job backlog per (DC, type). Real-valued: fractional decisions
// put fractional batches in the queues.
struct QueueState {
    Matrix backlogs;  // N x K, >= 0
};

// Per-slot dispatch decision: column k gives the fraction of type-k arrivals
// managed by each DC. Columns sum to 1, entries in [0, 1].
struct DecisionMatrix {
    Matrix fractions;  // N x K
};

// Cost of one type-k job under manager i, aggregated over where its tasks
// actually run: u[i][k] = sum_j price[j] * pue[j] * ratio[k](i,j) * power[k].
struct UnitCostMatrix {
    Matrix unit_cost;  // N x K, >= 0
};

enum class ViolationKind {
    shape,  // dimensions disagree with the config
    range,  // an entry is outside its allowed interval
    sum,    // a stochasticity (sum-to-one) check failed
};

struct Violation {
    ViolationKind kind = ViolationKind::range;
    std::string field;     // e.g. "allocation_ratio[k=0][i=1]"
    double observed = 0.0;
    std::string message;
};

// Violations are data, not faults: callers decide what to do with them.
struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationResult validate_config(const SystemConfig& config);
ValidationResult validate_observation(const SlotObservation& obs, const SystemConfig& config);
ValidationResult validate_decision(const DecisionMatrix& decision, const SystemConfig& config);

}  // namespace gda
