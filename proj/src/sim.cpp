#include "gda/sim.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <fstream>
#include <limits>
#include <utility>

#include <json.hpp>

#include "gda/baselines.hpp"
#include "gda/cost.hpp"
#include "gda/format.hpp"

namespace gda {

namespace {

void append_u64(std::uint64_t& hash, std::uint64_t value) {
    // FNV-1a, one byte at a time, little-endian field order.
    for (int byte = 0; byte < 8; ++byte) {
        hash ^= (value >> (8 * byte)) & 0xffu;
        hash *= 0x100000001b3u;
    }
}

void append_double(std::uint64_t& hash, double value) {
    append_u64(hash, std::bit_cast<std::uint64_t>(value));
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

}  // namespace

DecisionMatrix GmsaScheduler::decide(const QueueState& state, const SlotObservation& obs,
                                     const UnitCostMatrix& unit) {
    const CoefficientMatrix coeffs = build_coefficients(state, obs, unit, params_);
    return gda::decide(coeffs, params_, &unit);
}

DecisionMatrix DataScheduler::decide(const QueueState&, const SlotObservation&,
                                     const UnitCostMatrix&) {
    return decide_data(*config_);
}

DecisionMatrix RandomScheduler::decide(const QueueState&, const SlotObservation&,
                                       const UnitCostMatrix&) {
    return decide_random(*config_, stream_);
}

std::unique_ptr<Scheduler> make_scheduler(const std::string& name, const SystemConfig& config,
                                          const GmsaParams& params, std::uint64_t run_seed) {
    if (name == "gmsa") {
        return std::make_unique<GmsaScheduler>(params);
    }
    if (name == "data") {
        return std::make_unique<DataScheduler>(config);
    }
    if (name == "random") {
        return std::make_unique<RandomScheduler>(config,
                                                 derive_seed(run_seed, seed_index::policy));
    }
    throw std::invalid_argument("unknown scheduler: " + name);
}

std::uint64_t hash_observations(std::span<const SlotObservation> observations) {
    std::uint64_t hash = 0xcbf29ce484222325u;  // FNV offset basis
    for (const auto& obs : observations) {
        append_u64(hash, static_cast<std::uint64_t>(obs.slot_index));
        for (double a : obs.arrivals) append_double(hash, a);
        for (double mu : obs.service_rates.data()) append_double(hash, mu);
        for (double p : obs.pue) append_double(hash, p);
        for (double w : obs.price_weight) append_double(hash, w);
    }
    return hash;
}

SimulationRecord run_simulation(const SystemConfig& config,
                                std::span<const SlotObservation> observations,
                                Scheduler& scheduler, std::uint64_t seed) {
    if (observations.empty()) {
        throw std::invalid_argument("run_simulation: empty observation sequence");
    }
    if (const auto check = validate_config(config); !check.ok()) {
        throw std::invalid_argument("run_simulation: invalid config\n" + check.to_string());
    }

    SimulationRecord record;
    record.scheduler_name = scheduler.name();
    record.v = scheduler.v();
    record.seed = seed;
    record.observation_hash = hash_observations(observations);
    record.per_slot.reserve(observations.size());
    record.max_drift_gap = -std::numeric_limits<double>::infinity();
    record.max_noise_excess = -std::numeric_limits<double>::infinity();

    const double worst_case_bound = worst_case_noise_bound(config);
    const GmsaParams penalty_params{scheduler.v(), TieBreak::lowest_index};

    QueueState state{Matrix(config.num_dcs, config.num_job_types)};
    for (const auto& obs : observations) {
        const std::int64_t slot = obs.slot_index;
        if (const auto check = validate_observation(obs, config); !check.ok()) {
            throw SimulationError(slot, "invalid observation\n" + check.to_string());
        }

        const UnitCostMatrix unit = unit_costs(config, obs);
        const DecisionMatrix decision = scheduler.decide(state, obs, unit);
        if (const auto check = validate_decision(decision, config); !check.ok()) {
            throw SimulationError(slot, "scheduler produced invalid decision\n" + check.to_string());
        }

        const double cost = slot_cost(unit, obs, decision);
        const double penalty =
            drift_plus_penalty_value(state, obs, unit, decision, penalty_params);
        const QueueState next = advance_queues(state, decision, obs);
        for (double q : next.backlogs.data()) {
            if (q < 0.0) {
                throw SimulationError(slot, "negative backlog after update");
            }
        }

        const DriftBoundCheck drift = check_drift_bound(state, decision, obs, next);
        if (!drift.holds) {
            throw SimulationError(slot, "quadratic drift bound violated, relative gap " +
                                            format_double(drift.gap));
        }
        const double noise = slot_noise_bound(decision, obs);
        if (noise > worst_case_bound) {
            throw SimulationError(slot, "slot noise bound " + format_double(noise) +
                                            " exceeds worst-case constant " +
                                            format_double(worst_case_bound));
        }

        record.max_drift_gap = std::max(record.max_drift_gap, drift.gap);
        record.max_noise_excess = std::max(record.max_noise_excess, noise - worst_case_bound);
        record.per_slot.push_back({slot, cost, total_backlog(state), penalty});
        state = next;
    }

    // Left-to-right accumulation so tests can reproduce the averages exactly.
    double cost_sum = 0.0;
    double backlog_sum = 0.0;
    for (const auto& metrics : record.per_slot) {
        cost_sum += metrics.cost;
        backlog_sum += metrics.total_backlog;
    }
    const double horizon = static_cast<double>(record.per_slot.size());
    record.time_average_cost = cost_sum / horizon;
    record.time_average_backlog = backlog_sum / horizon;
    return record;
}

SweepResult run_sweep(const SystemConfig& config, const GeneratorSpec& spec, int horizon,
                      std::span<const double> v_values,
                      std::span<const std::string> schedulers, const GmsaParams& base_params,
                      int replications) {
    if (v_values.empty() || schedulers.empty()) {
        throw std::invalid_argument("run_sweep: empty v or scheduler list");
    }
    if (horizon <= 0 || replications <= 0) {
        throw std::invalid_argument("run_sweep: horizon and replications must be positive");
    }

    struct Cell {
        double cost_sum = 0.0;
        double backlog_sum = 0.0;
    };
    // gmsa cells indexed by position in v_values; baselines hold one cell.
    std::vector<Cell> gmsa_cells(v_values.size());
    Cell data_cell;
    Cell random_cell;
    double max_drift_gap = -std::numeric_limits<double>::infinity();
    double max_noise_excess = -std::numeric_limits<double>::infinity();

    const bool want_gmsa = std::ranges::find(schedulers, "gmsa") != schedulers.end();
    const bool want_data = std::ranges::find(schedulers, "data") != schedulers.end();
    const bool want_random = std::ranges::find(schedulers, "random") != schedulers.end();

    for (int rep = 0; rep < replications; ++rep) {
        GeneratorSpec rep_spec = spec;
        rep_spec.seed = derive_seed(spec.seed, seed_index::replication + rep);
        const std::vector<SlotObservation> observations =
            generate_observations(rep_spec, config, horizon);
        const std::uint64_t expected_hash = hash_observations(observations);

        auto run_cell = [&](Scheduler& scheduler) {
            SimulationRecord record =
                run_simulation(config, observations, scheduler, rep_spec.seed);
            if (record.observation_hash != expected_hash) {
                throw std::logic_error("run_sweep: common-random-number stream diverged");
            }
            max_drift_gap = std::max(max_drift_gap, record.max_drift_gap);
            max_noise_excess = std::max(max_noise_excess, record.max_noise_excess);
            return record;
        };

        if (want_gmsa) {
            for (std::size_t vi = 0; vi < v_values.size(); ++vi) {
                GmsaParams params = base_params;
                params.v = v_values[vi];
                GmsaScheduler scheduler(params);
                const SimulationRecord record = run_cell(scheduler);
                gmsa_cells[vi].cost_sum += record.time_average_cost;
                gmsa_cells[vi].backlog_sum += record.time_average_backlog;
            }
        }
        if (want_data) {
            DataScheduler scheduler(config);
            const SimulationRecord record = run_cell(scheduler);
            data_cell.cost_sum += record.time_average_cost;
            data_cell.backlog_sum += record.time_average_backlog;
        }
        if (want_random) {
            RandomScheduler scheduler(config, derive_seed(rep_spec.seed, seed_index::policy));
            const SimulationRecord record = run_cell(scheduler);
            random_cell.cost_sum += record.time_average_cost;
            random_cell.backlog_sum += record.time_average_backlog;
        }
    }

    const double reps = static_cast<double>(replications);
    SweepResult result;
    result.max_drift_gap = max_drift_gap;
    result.max_noise_excess = max_noise_excess;
    for (const auto& name : schedulers) {
        for (std::size_t vi = 0; vi < v_values.size(); ++vi) {
            SweepEntry entry;
            entry.scheduler = name;
            entry.v = v_values[vi];
            if (name == "gmsa") {
                entry.time_average_cost = gmsa_cells[vi].cost_sum / reps;
                entry.time_average_backlog = gmsa_cells[vi].backlog_sum / reps;
            } else if (name == "data") {
                // Baselines ignore v; the same averages repeat across the row set.
                entry.time_average_cost = data_cell.cost_sum / reps;
                entry.time_average_backlog = data_cell.backlog_sum / reps;
            } else if (name == "random") {
                entry.time_average_cost = random_cell.cost_sum / reps;
                entry.time_average_backlog = random_cell.backlog_sum / reps;
            } else {
                throw std::invalid_argument("unknown scheduler: " + name);
            }
            result.entries.push_back(std::move(entry));
        }
    }
    return result;
}

double quarter_mean_backlog(const SimulationRecord& record, int quarter) {
    if (quarter < 0 || quarter > 3) {
        throw std::invalid_argument("quarter must be in 0..3");
    }
    const std::size_t n = record.per_slot.size();
    const std::size_t begin = n * static_cast<std::size_t>(quarter) / 4;
    const std::size_t end = n * static_cast<std::size_t>(quarter + 1) / 4;
    if (begin == end) {
        throw std::invalid_argument("horizon too short to split into quarters");
    }
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        sum += record.per_slot[i].total_backlog;
    }
    return sum / static_cast<double>(end - begin);
}

void write_per_slot_csv(const std::filesystem::path& path, const SimulationRecord& record) {
    std::ofstream out = open_for_write(path);
    out << "slot,cost,total_backlog,drift_plus_penalty\n";
    for (const auto& metrics : record.per_slot) {
        out << metrics.slot << ',' << format_double(metrics.cost) << ','
            << format_double(metrics.total_backlog) << ','
            << format_double(metrics.drift_plus_penalty) << '\n';
    }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& result) {
    std::ofstream out = open_for_write(path);
    out << "scheduler,v,time_average_cost,time_average_backlog\n";
    for (const auto& entry : result.entries) {
        out << entry.scheduler << ',' << format_double(entry.v) << ','
            << format_double(entry.time_average_cost) << ','
            << format_double(entry.time_average_backlog) << '\n';
    }
}

void write_record_json(const std::filesystem::path& path, const SimulationRecord& record) {
    nlohmann::json doc;
    doc["scheduler"] = record.scheduler_name;
    doc["v"] = record.v;
    doc["seed"] = record.seed;
    doc["horizon"] = record.per_slot.size();
    doc["time_average_cost"] = record.time_average_cost;
    doc["time_average_backlog"] = record.time_average_backlog;
    doc["observation_hash"] = record.observation_hash;
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
}

void write_sweep_json(const std::filesystem::path& path, const SweepResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& entry : result.entries) {
        rows.push_back({{"scheduler", entry.scheduler},
                        {"v", entry.v},
                        {"time_average_cost", entry.time_average_cost},
                        {"time_average_backlog", entry.time_average_backlog}});
    }
    nlohmann::json doc;
    doc["entries"] = rows;
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
}

}  // namespace gda
