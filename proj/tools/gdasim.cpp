// gdasim: validate scenarios, run single simulations, sweep (scheduler, v)
// grids, and materialize synthetic traces. One scenario JSON file is the
// source of truth; flags override individual fields and the effective
// configuration is echoed into the output directory.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gda/format.hpp"
#include "gda/scenario.hpp"
#include "gda/sim.hpp"
#include "gda/trace.hpp"

namespace {

namespace fs = std::filesystem;

// Exit codes are a stable contract: 0 ok, 1 validation or semantic failure,
// 2 I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

// GDASIM_OUT_ROOT relocates relative output directories; absolute --out
// paths are used as given.
fs::path resolve_out_dir(const std::string& out_dir) {
    fs::path path(out_dir);
    if (path.is_absolute()) {
        return path;
    }
    if (const char* root = std::getenv("GDASIM_OUT_ROOT"); root != nullptr && *root != '\0') {
        return fs::path(root) / path;
    }
    return path;
}

struct RunOverrides {
    std::optional<std::string> scheduler;
    std::optional<double> v;
    std::optional<std::uint64_t> seed;
    std::optional<int> horizon;
    std::optional<std::string> tie_break;
    std::optional<std::string> out_dir;
};

struct SweepOverrides {
    std::vector<double> v_values;
    std::vector<std::string> schedulers;
    std::optional<int> replications;
    std::optional<std::uint64_t> seed;
    std::optional<int> horizon;
    std::optional<std::string> out_dir;
};

gda::TieBreak parse_tie_break(const std::string& text) {
    if (text == "lowest_index") {
        return gda::TieBreak::lowest_index;
    }
    if (text == "lowest_unit_cost") {
        return gda::TieBreak::lowest_unit_cost;
    }
    throw gda::ScenarioError("unknown tie_break: " + text);
}

// Loads, applies overrides, validates. Violations go to stderr.
gda::Scenario prepare_scenario(const std::string& config_path) {
    gda::Scenario scenario = gda::load_scenario(config_path);
    const gda::ValidationResult check = gda::validate_scenario(scenario);
    if (!check.ok()) {
        std::cerr << "scenario invalid:\n" << check.to_string();
        throw gda::ScenarioError("scenario failed validation");
    }
    return scenario;
}

int cmd_validate(const std::string& config_path) {
    const gda::Scenario scenario = gda::load_scenario(config_path);
    const gda::ValidationResult check = gda::validate_scenario(scenario);
    if (!check.ok()) {
        std::cout << check.to_string();
        std::cout << check.violations.size() << " violation(s)\n";
        return kExitInvalid;
    }
    std::cout << "OK\n";
    return kExitOk;
}

int cmd_run(const std::string& config_path, const RunOverrides& overrides) {
    gda::Scenario scenario = prepare_scenario(config_path);
    if (overrides.seed) scenario.generator.seed = *overrides.seed;
    if (overrides.horizon) scenario.horizon = *overrides.horizon;
    if (overrides.tie_break) scenario.tie_break = parse_tie_break(*overrides.tie_break);
    if (overrides.out_dir) scenario.output_dir = *overrides.out_dir;

    const std::string scheduler_name = overrides.scheduler.value_or(
        scenario.schedulers.empty() ? std::string("gmsa") : scenario.schedulers.front());
    double v = overrides.v.value_or(scenario.v_values.empty() ? 1.0
                                                              : scenario.v_values.front());
    if (scheduler_name != "gmsa" && overrides.v.has_value()) {
        std::cerr << "warning: --v has no effect on scheduler '" << scheduler_name
                  << "', ignoring\n";
    }
    if (scheduler_name != "gmsa") {
        v = 0.0;
    }
    scenario.schedulers = {scheduler_name};
    scenario.v_values = {v};

    const gda::SystemConfig config = gda::materialize_config(scenario);
    const std::vector<gda::SlotObservation> observations =
        gda::generate_observations(scenario.generator, config, scenario.horizon);

    const gda::GmsaParams params{v, scenario.tie_break};
    const auto scheduler =
        gda::make_scheduler(scheduler_name, config, params, scenario.generator.seed);
    const gda::SimulationRecord record =
        gda::run_simulation(config, observations, *scheduler, scenario.generator.seed);

    const fs::path out_dir = resolve_out_dir(scenario.output_dir);
    gda::write_per_slot_csv(out_dir / "per_slot.csv", record);
    gda::write_record_json(out_dir / "summary.json", record);
    gda::save_scenario(out_dir / "scenario_effective.json", scenario);

    std::cout << "scheduler=" << record.scheduler_name << " v=" << gda::format_double(record.v)
              << " seed=" << record.seed << '\n';
    std::cout << "time_average_cost=" << gda::format_double(record.time_average_cost) << '\n';
    std::cout << "time_average_backlog=" << gda::format_double(record.time_average_backlog)
              << '\n';
    std::cout << "wrote " << (out_dir / "per_slot.csv").string() << '\n';
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const SweepOverrides& overrides) {
    gda::Scenario scenario = prepare_scenario(config_path);
    if (!overrides.v_values.empty()) scenario.v_values = overrides.v_values;
    if (!overrides.schedulers.empty()) scenario.schedulers = overrides.schedulers;
    if (overrides.replications) scenario.replications = *overrides.replications;
    if (overrides.seed) scenario.generator.seed = *overrides.seed;
    if (overrides.horizon) scenario.horizon = *overrides.horizon;
    if (overrides.out_dir) scenario.output_dir = *overrides.out_dir;
    for (const auto& name : scenario.schedulers) {
        if (name != "gmsa" && name != "data" && name != "random") {
            throw gda::ScenarioError("unknown scheduler: " + name);
        }
    }

    const gda::SystemConfig config = gda::materialize_config(scenario);
    const gda::GmsaParams base_params{1.0, scenario.tie_break};
    const gda::SweepResult result =
        gda::run_sweep(config, scenario.generator, scenario.horizon, scenario.v_values,
                       scenario.schedulers, base_params, scenario.replications);

    const fs::path out_dir = resolve_out_dir(scenario.output_dir);
    gda::write_sweep_csv(out_dir / "sweep_summary.csv", result);
    gda::write_sweep_json(out_dir / "sweep_summary.json", result);
    gda::save_scenario(out_dir / "scenario_effective.json", scenario);

    std::cout << "scheduler,v,time_average_cost,time_average_backlog\n";
    for (const auto& entry : result.entries) {
        std::cout << entry.scheduler << ',' << gda::format_double(entry.v) << ','
                  << gda::format_double(entry.time_average_cost) << ','
                  << gda::format_double(entry.time_average_backlog) << '\n';
    }
    std::cout << "wrote " << (out_dir / "sweep_summary.csv").string() << '\n';
    return kExitOk;
}

int cmd_gen_traces(const std::string& config_path, std::optional<std::uint64_t> seed,
                   std::optional<int> horizon, std::optional<std::string> out_dir_flag) {
    gda::Scenario scenario = prepare_scenario(config_path);
    if (seed) scenario.generator.seed = *seed;
    if (horizon) scenario.horizon = *horizon;
    if (out_dir_flag) scenario.output_dir = *out_dir_flag;

    const gda::SystemConfig config = gda::materialize_config(scenario);
    const std::vector<gda::SlotObservation> observations =
        gda::generate_observations(scenario.generator, config, scenario.horizon);

    const auto n = static_cast<std::size_t>(config.num_dcs);
    gda::TraceSeries pue{gda::TraceKind::pue, gda::Matrix(observations.size(), n)};
    gda::TraceSeries price{gda::TraceKind::price_weight, gda::Matrix(observations.size(), n)};
    for (std::size_t t = 0; t < observations.size(); ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            pue.values(t, i) = observations[t].pue[i];
            price.values(t, i) = observations[t].price_weight[i];
        }
    }

    const fs::path out_dir = resolve_out_dir(scenario.output_dir);
    gda::write_trace(out_dir / "pue.csv", pue, config.dc_ids);
    gda::write_trace(out_dir / "price_weight.csv", price, config.dc_ids);
    std::cout << "wrote " << (out_dir / "pue.csv").string() << '\n';
    std::cout << "wrote " << (out_dir / "price_weight.csv").string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-aware global manager selection: simulate and sweep"};
    app.require_subcommand(1);

    std::string config_path;

    auto* validate = app.add_subcommand("validate", "Check a scenario file, print violations");
    validate->add_option("--config", config_path, "Scenario JSON file")->required();

    RunOverrides run_overrides;
    auto* run = app.add_subcommand("run", "Simulate one (scheduler, v, seed) cell");
    run->add_option("--config", config_path, "Scenario JSON file")->required();
    run->add_option("--scheduler", run_overrides.scheduler, "gmsa, data or random");
    run->add_option("--v", run_overrides.v, "Cost/backlog tradeoff weight");
    run->add_option("--seed", run_overrides.seed, "Base seed override");
    run->add_option("--horizon", run_overrides.horizon, "Number of slots");
    run->add_option("--tie-break", run_overrides.tie_break,
                    "lowest_index or lowest_unit_cost");
    run->add_option("--out", run_overrides.out_dir, "Output directory");

    SweepOverrides sweep_overrides;
    auto* sweep = app.add_subcommand("sweep", "Run the full (scheduler, v) grid");
    sweep->add_option("--config", config_path, "Scenario JSON file")->required();
    sweep->add_option("--v", sweep_overrides.v_values, "Comma-separated v values")
        ->delimiter(',');
    sweep->add_option("--schedulers", sweep_overrides.schedulers,
                      "Comma-separated scheduler names")
        ->delimiter(',');
    sweep->add_option("--replications", sweep_overrides.replications,
                      "Derived-seed runs to average");
    sweep->add_option("--seed", sweep_overrides.seed, "Base seed override");
    sweep->add_option("--horizon", sweep_overrides.horizon, "Number of slots");
    sweep->add_option("--out", sweep_overrides.out_dir, "Output directory");

    std::optional<std::uint64_t> traces_seed;
    std::optional<int> traces_horizon;
    std::optional<std::string> traces_out;
    auto* gen_traces =
        app.add_subcommand("gen-traces", "Write the realized PUE/price series to CSV");
    gen_traces->add_option("--config", config_path, "Scenario JSON file")->required();
    gen_traces->add_option("--seed", traces_seed, "Base seed override");
    gen_traces->add_option("--horizon", traces_horizon, "Number of slots");
    gen_traces->add_option("--out", traces_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            return cmd_validate(config_path);
        }
        if (run->parsed()) {
            return cmd_run(config_path, run_overrides);
        }
        if (sweep->parsed()) {
            return cmd_sweep(config_path, sweep_overrides);
        }
        if (gen_traces->parsed()) {
            return cmd_gen_traces(config_path, traces_seed, traces_horizon, traces_out);
        }
    } catch (const gda::ScenarioIoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const gda::TraceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == gda::TraceErrorKind::io ? kExitIo : kExitInvalid;
    } catch (const gda::SimulationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const gda::ScenarioError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const gda::GeneratorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
