#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gda/generate.hpp"
#include "gda/gmsa.hpp"
#include "gda/queue.hpp"
#include "gda/rng.hpp"
#include "gda/types.hpp"

namespace gda {

// Aborts a run, naming the slot where an invariant broke.
class SimulationError : public std::runtime_error {
public:
    SimulationError(std::int64_t slot, const std::string& message)
        : std::runtime_error("slot " + std::to_string(slot) + ": " + message), slot_(slot) {}

    std::int64_t slot() const { return slot_; }

private:
    std::int64_t slot_;
};

// Per-slot decision policy. Implementations must be deterministic given
// their construction arguments; RANDOM owns its own stream.
class Scheduler {
public:
    virtual ~Scheduler() = default;
    virtual const std::string& name() const = 0;
    // Tradeoff parameter used in the penalty diagnostic; 0 for baselines.
    virtual double v() const { return 0.0; }
    virtual DecisionMatrix decide(const QueueState& state, const SlotObservation& obs,
                                  const UnitCostMatrix& unit) = 0;
};

class GmsaScheduler final : public Scheduler {
public:
    explicit GmsaScheduler(GmsaParams params) : params_(params) {}
    const std::string& name() const override { return name_; }
    double v() const override { return params_.v; }
    DecisionMatrix decide(const QueueState& state, const SlotObservation& obs,
                          const UnitCostMatrix& unit) override;

private:
    GmsaParams params_;
    std::string name_ = "gmsa";
};

class DataScheduler final : public Scheduler {
public:
    explicit DataScheduler(const SystemConfig& config) : config_(&config) {}
    const std::string& name() const override { return name_; }
    DecisionMatrix decide(const QueueState& state, const SlotObservation& obs,
                          const UnitCostMatrix& unit) override;

private:
    const SystemConfig* config_;
    std::string name_ = "data";
};

class RandomScheduler final : public Scheduler {
public:
    RandomScheduler(const SystemConfig& config, std::uint64_t seed)
        : config_(&config), stream_(seed) {}
    const std::string& name() const override { return name_; }
    DecisionMatrix decide(const QueueState& state, const SlotObservation& obs,
                          const UnitCostMatrix& unit) override;

private:
    const SystemConfig* config_;
    RandomStream stream_;
    std::string name_ = "random";
};

// name in {"gmsa", "data", "random"}. The RANDOM policy stream is seeded with
// derive_seed(run_seed, seed_index::policy).
std::unique_ptr<Scheduler> make_scheduler(const std::string& name, const SystemConfig& config,
                                          const GmsaParams& params, std::uint64_t run_seed);

struct SlotMetrics {
    std::int64_t slot = 0;
    double cost = 0.0;                // realized energy cost of the slot
    double total_backlog = 0.0;       // total backlog at the start of the slot
    double drift_plus_penalty = 0.0;  // slot objective at the applied decision
};

struct SimulationRecord {
    std::string scheduler_name;
    double v = 0.0;  // 0 for baselines
    std::uint64_t seed = 0;
    std::vector<SlotMetrics> per_slot;
    double time_average_cost = 0.0;     // mean of per_slot costs, same accumulation
    double time_average_backlog = 0.0;  // mean of per_slot backlogs, same accumulation
    std::uint64_t observation_hash = 0;
    // Worst per-slot margins of the quadratic drift bound diagnostics; both
    // stay non-positive (up to kDriftBoundRelTol) on a healthy run.
    double max_drift_gap = 0.0;
    double max_noise_excess = 0.0;
};

// Runs the slot loop: observe, decide, account cost, advance queues. Queues
// start empty; the decision for slot t sees Q(t) at the start of slot t. The
// quadratic drift bound and queue non-negativity are checked on every slot;
// any violation throws SimulationError with the slot index.
SimulationRecord run_simulation(const SystemConfig& config,
                                std::span<const SlotObservation> observations,
                                Scheduler& scheduler, std::uint64_t seed);

struct SweepEntry {
    std::string scheduler;
    double v = 0.0;
    double time_average_cost = 0.0;
    double time_average_backlog = 0.0;
};

// One row per (scheduler, v) pair requested, in request order. The max_*
// fields aggregate the per-run drift diagnostics over every cell and
// replication, so a sweep carries its own bound-check evidence.
struct SweepResult {
    std::vector<SweepEntry> entries;
    double max_drift_gap = 0.0;
    double max_noise_excess = 0.0;
};

// Runs every (scheduler, v) cell under common random numbers: within one
// replication all cells consume the identical observation sequence (checked
// by hash). Baselines are simulated once per replication and their rows
// replicated across the requested v values. Entries average the per-cell
// metrics over `replications` derived-seed runs.
SweepResult run_sweep(const SystemConfig& config, const GeneratorSpec& spec, int horizon,
                      std::span<const double> v_values,
                      std::span<const std::string> schedulers, const GmsaParams& base_params,
                      int replications = 1);

// Order-sensitive FNV-1a over the bit patterns of every observation field.
std::uint64_t hash_observations(std::span<const SlotObservation> observations);

// Mean per-slot backlog over quarter q (0..3) of the horizon.
double quarter_mean_backlog(const SimulationRecord& record, int quarter);

// Plot-ready tables. Headers:
//   per-slot: slot,cost,total_backlog,drift_plus_penalty
//   sweep:    scheduler,v,time_average_cost,time_average_backlog
void write_per_slot_csv(const std::filesystem::path& path, const SimulationRecord& record);
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result);

// Machine-readable mirrors of the CSV outputs.
void write_record_json(const std::filesystem::path& path, const SimulationRecord& record);
void write_sweep_json(const std::filesystem::path& path, const SweepResult& result);

}  // namespace gda
