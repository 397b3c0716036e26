#include "gda/scenario.hpp"

#include <fstream>
#include <utility>

namespace gda {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ScenarioError(message); }

const json& require(const json& doc, const char* key, const std::string& context) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        fail("missing \"" + std::string(key) + "\" in " + context);
    }
    return *it;
}

template <typename T>
T get_as(const json& value, const std::string& what) {
    try {
        return value.get<T>();
    } catch (const json::exception& e) {
        fail(what + ": " + e.what());
    }
}

template <typename T>
T get_or(const json& doc, const char* key, T fallback, const std::string& context) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        return fallback;
    }
    return get_as<T>(*it, context + "." + key);
}

Matrix matrix_from_json(const json& value, const std::string& what) {
    const auto rows = get_as<std::vector<std::vector<double>>>(value, what);
    if (rows.empty()) {
        fail(what + ": empty matrix");
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            fail(what + ": ragged rows");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string resolve(const std::string& path, const std::filesystem::path& base_dir) {
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) {
        return path;
    }
    return (base_dir / p).lexically_normal().string();
}

ArrivalSpec arrival_from_json(const json& doc) {
    ArrivalSpec spec;
    const auto kind = get_as<std::string>(require(doc, "kind", "generator.arrival"),
                                          "generator.arrival.kind");
    if (kind != "poisson") {
        fail("unknown arrival kind: " + kind);
    }
    spec.kind = ArrivalKind::poisson;
    spec.rate_per_slot = get_as<std::vector<double>>(
        require(doc, "rate_per_slot", "generator.arrival"), "generator.arrival.rate_per_slot");
    return spec;
}

ServiceSpec service_from_json(const json& doc) {
    ServiceSpec spec;
    const auto kind = get_as<std::string>(require(doc, "kind", "generator.service"),
                                          "generator.service.kind");
    if (kind == "uniform_integer") {
        spec.kind = ServiceKind::uniform_integer;
        spec.lo = matrix_from_json(require(doc, "lo", "generator.service"),
                                   "generator.service.lo");
        spec.hi = matrix_from_json(require(doc, "hi", "generator.service"),
                                   "generator.service.hi");
    } else if (kind == "truncated_poisson") {
        spec.kind = ServiceKind::truncated_poisson;
        spec.rate = matrix_from_json(require(doc, "rate", "generator.service"),
                                     "generator.service.rate");
    } else {
        fail("unknown service kind: " + kind);
    }
    return spec;
}

PueSpec pue_from_json(const json& doc, const std::filesystem::path& base_dir) {
    PueSpec spec;
    const auto kind =
        get_as<std::string>(require(doc, "kind", "generator.pue"), "generator.pue.kind");
    if (kind == "constant") {
        spec.kind = PueKind::constant;
        spec.value = get_as<std::vector<double>>(require(doc, "value", "generator.pue"),
                                                 "generator.pue.value");
    } else if (kind == "sinusoidal_diurnal") {
        spec.kind = PueKind::sinusoidal_diurnal;
        spec.base = get_as<std::vector<double>>(require(doc, "base", "generator.pue"),
                                                "generator.pue.base");
        spec.amplitude = get_as<std::vector<double>>(
            require(doc, "amplitude", "generator.pue"), "generator.pue.amplitude");
        spec.phase_slots = get_as<std::vector<double>>(
            require(doc, "phase_slots", "generator.pue"), "generator.pue.phase_slots");
        spec.period_slots = get_or(doc, "period_slots", 288, "generator.pue");
    } else if (kind == "file") {
        spec.kind = PueKind::file;
        spec.path = resolve(get_as<std::string>(require(doc, "path", "generator.pue"),
                                                "generator.pue.path"),
                            base_dir);
    } else {
        fail("unknown pue kind: " + kind);
    }
    return spec;
}

PriceSpec price_from_json(const json& doc, const std::filesystem::path& base_dir) {
    PriceSpec spec;
    const auto kind =
        get_as<std::string>(require(doc, "kind", "generator.price"), "generator.price.kind");
    if (kind == "constant") {
        spec.kind = PriceKind::constant;
        spec.value = get_as<std::vector<double>>(require(doc, "value", "generator.price"),
                                                 "generator.price.value");
    } else if (kind == "step_schedule") {
        spec.kind = PriceKind::step_schedule;
        spec.levels = get_as<std::vector<std::vector<double>>>(
            require(doc, "levels", "generator.price"), "generator.price.levels");
        spec.slots_per_step = get_or(doc, "slots_per_step", 1, "generator.price");
    } else if (kind == "file") {
        spec.kind = PriceKind::file;
        spec.path = resolve(get_as<std::string>(require(doc, "path", "generator.price"),
                                                "generator.price.path"),
                            base_dir);
    } else {
        fail("unknown price kind: " + kind);
    }
    return spec;
}

RatioSpec ratio_from_json(const json& doc, const std::filesystem::path& base_dir) {
    RatioSpec spec;
    const auto kind =
        get_as<std::string>(require(doc, "kind", "generator.ratio"), "generator.ratio.kind");
    if (kind == "dataset_proportional") {
        spec.kind = RatioKind::dataset_proportional;
    } else if (kind == "dirichlet_random") {
        spec.kind = RatioKind::dirichlet_random;
    } else if (kind == "file") {
        spec.kind = RatioKind::file;
        spec.path = resolve(get_as<std::string>(require(doc, "path", "generator.ratio"),
                                                "generator.ratio.path"),
                            base_dir);
    } else {
        fail("unknown ratio kind: " + kind);
    }
    return spec;
}

const char* arrival_kind_name(ArrivalKind) { return "poisson"; }

const char* service_kind_name(ServiceKind kind) {
    return kind == ServiceKind::uniform_integer ? "uniform_integer" : "truncated_poisson";
}

const char* pue_kind_name(PueKind kind) {
    switch (kind) {
        case PueKind::constant: return "constant";
        case PueKind::sinusoidal_diurnal: return "sinusoidal_diurnal";
        case PueKind::file: return "file";
    }
    return "constant";
}

const char* price_kind_name(PriceKind kind) {
    switch (kind) {
        case PriceKind::constant: return "constant";
        case PriceKind::step_schedule: return "step_schedule";
        case PriceKind::file: return "file";
    }
    return "constant";
}

const char* ratio_kind_name(RatioKind kind) {
    switch (kind) {
        case RatioKind::dataset_proportional: return "dataset_proportional";
        case RatioKind::dirichlet_random: return "dirichlet_random";
        case RatioKind::file: return "file";
    }
    return "dataset_proportional";
}

const char* tie_break_name(TieBreak tie_break) {
    return tie_break == TieBreak::lowest_index ? "lowest_index" : "lowest_unit_cost";
}

}  // namespace

Scenario scenario_from_json(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) {
        fail("scenario document must be a JSON object");
    }
    Scenario scenario;

    const json& system = require(doc, "system", "scenario");
    scenario.system.dc_ids = get_as<std::vector<std::string>>(
        require(system, "dc_ids", "system"), "system.dc_ids");
    scenario.system.it_power_per_job = get_as<std::vector<double>>(
        require(system, "it_power_per_job", "system"), "system.it_power_per_job");
    scenario.system.arrival_bound = get_as<std::vector<double>>(
        require(system, "arrival_bound", "system"), "system.arrival_bound");
    scenario.system.service_bound = get_as<std::vector<double>>(
        require(system, "service_bound", "system"), "system.service_bound");
    scenario.system.num_dcs = static_cast<int>(scenario.system.dc_ids.size());
    scenario.system.num_job_types = static_cast<int>(scenario.system.it_power_per_job.size());

    const json& dist = require(system, "dataset_distribution", "system");
    scenario.system.dataset_distribution =
        get_as<std::vector<std::vector<double>>>(dist, "system.dataset_distribution");

    if (const auto it = system.find("allocation_ratio"); it != system.end()) {
        if (!it->is_array()) {
            fail("system.allocation_ratio must be an array of matrices");
        }
        for (std::size_t k = 0; k < it->size(); ++k) {
            scenario.system.allocation_ratio.push_back(matrix_from_json(
                (*it)[k], "system.allocation_ratio[" + std::to_string(k) + "]"));
        }
    }

    const json& generator = require(doc, "generator", "scenario");
    scenario.generator.seed = get_or<std::uint64_t>(generator, "seed", 0, "generator");
    scenario.generator.arrival =
        arrival_from_json(require(generator, "arrival", "generator"));
    scenario.generator.service =
        service_from_json(require(generator, "service", "generator"));
    scenario.generator.pue = pue_from_json(require(generator, "pue", "generator"), base_dir);
    scenario.generator.price =
        price_from_json(require(generator, "price", "generator"), base_dir);
    if (const auto it = generator.find("ratio"); it != generator.end()) {
        scenario.generator.ratio = ratio_from_json(*it, base_dir);
    }
    if (!scenario.generator.ratio.has_value() && scenario.system.allocation_ratio.empty()) {
        fail("scenario needs system.allocation_ratio or generator.ratio");
    }

    scenario.horizon = get_or(doc, "horizon", scenario.horizon, "scenario");
    scenario.v_values = get_or(doc, "v_values", scenario.v_values, "scenario");
    scenario.schedulers = get_or(doc, "schedulers", scenario.schedulers, "scenario");
    scenario.replications = get_or(doc, "replications", scenario.replications, "scenario");
    scenario.output_dir = get_or(doc, "output_dir", scenario.output_dir, "scenario");

    const auto tie_break =
        get_or<std::string>(doc, "tie_break", "lowest_index", "scenario");
    if (tie_break == "lowest_index") {
        scenario.tie_break = TieBreak::lowest_index;
    } else if (tie_break == "lowest_unit_cost") {
        scenario.tie_break = TieBreak::lowest_unit_cost;
    } else {
        fail("unknown tie_break: " + tie_break);
    }

    if (scenario.horizon <= 0) {
        fail("horizon must be positive");
    }
    if (scenario.replications <= 0) {
        fail("replications must be positive");
    }
    for (double v : scenario.v_values) {
        if (v < 0.0) {
            fail("v_values entries must be >= 0");
        }
    }
    for (const auto& name : scenario.schedulers) {
        if (name != "gmsa" && name != "data" && name != "random") {
            fail("unknown scheduler: " + name);
        }
    }
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ScenarioIoError("cannot open scenario file: " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        fail("invalid JSON in " + path.string() + ": " + e.what());
    }
    return scenario_from_json(doc, path.parent_path());
}

json scenario_to_json(const Scenario& scenario) {
    json system;
    system["dc_ids"] = scenario.system.dc_ids;
    system["it_power_per_job"] = scenario.system.it_power_per_job;
    system["arrival_bound"] = scenario.system.arrival_bound;
    system["service_bound"] = scenario.system.service_bound;
    system["dataset_distribution"] = scenario.system.dataset_distribution;
    if (!scenario.system.allocation_ratio.empty()) {
        json tensors = json::array();
        for (const auto& m : scenario.system.allocation_ratio) {
            tensors.push_back(matrix_to_json(m));
        }
        system["allocation_ratio"] = std::move(tensors);
    }

    json generator;
    generator["seed"] = scenario.generator.seed;
    generator["arrival"] = {
        {"kind", arrival_kind_name(scenario.generator.arrival.kind)},
        {"rate_per_slot", scenario.generator.arrival.rate_per_slot},
    };
    json service;
    service["kind"] = service_kind_name(scenario.generator.service.kind);
    if (scenario.generator.service.kind == ServiceKind::uniform_integer) {
        service["lo"] = matrix_to_json(scenario.generator.service.lo);
        service["hi"] = matrix_to_json(scenario.generator.service.hi);
    } else {
        service["rate"] = matrix_to_json(scenario.generator.service.rate);
    }
    generator["service"] = std::move(service);

    json pue;
    pue["kind"] = pue_kind_name(scenario.generator.pue.kind);
    switch (scenario.generator.pue.kind) {
        case PueKind::constant:
            pue["value"] = scenario.generator.pue.value;
            break;
        case PueKind::sinusoidal_diurnal:
            pue["base"] = scenario.generator.pue.base;
            pue["amplitude"] = scenario.generator.pue.amplitude;
            pue["phase_slots"] = scenario.generator.pue.phase_slots;
            pue["period_slots"] = scenario.generator.pue.period_slots;
            break;
        case PueKind::file:
            pue["path"] = scenario.generator.pue.path;
            break;
    }
    generator["pue"] = std::move(pue);

    json price;
    price["kind"] = price_kind_name(scenario.generator.price.kind);
    switch (scenario.generator.price.kind) {
        case PriceKind::constant:
            price["value"] = scenario.generator.price.value;
            break;
        case PriceKind::step_schedule:
            price["levels"] = scenario.generator.price.levels;
            price["slots_per_step"] = scenario.generator.price.slots_per_step;
            break;
        case PriceKind::file:
            price["path"] = scenario.generator.price.path;
            break;
    }
    generator["price"] = std::move(price);

    if (scenario.generator.ratio.has_value()) {
        json ratio;
        ratio["kind"] = ratio_kind_name(scenario.generator.ratio->kind);
        if (scenario.generator.ratio->kind == RatioKind::file) {
            ratio["path"] = scenario.generator.ratio->path;
        }
        generator["ratio"] = std::move(ratio);
    }

    json doc;
    doc["system"] = std::move(system);
    doc["generator"] = std::move(generator);
    doc["horizon"] = scenario.horizon;
    doc["v_values"] = scenario.v_values;
    doc["schedulers"] = scenario.schedulers;
    doc["tie_break"] = tie_break_name(scenario.tie_break);
    doc["replications"] = scenario.replications;
    doc["output_dir"] = scenario.output_dir;
    return doc;
}

void save_scenario(const std::filesystem::path& path, const Scenario& scenario) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ScenarioIoError("cannot open for writing: " + path.string());
    }
    out << scenario_to_json(scenario).dump(2) << '\n';
}

SystemConfig materialize_config(const Scenario& scenario) {
    SystemConfig config = scenario.system;
    if (scenario.generator.ratio.has_value()) {
        try {
            config.allocation_ratio = generate_ratios(scenario.generator, config);
        } catch (const GeneratorError& e) {
            fail(std::string("ratio generation failed: ") + e.what());
        }
    }
    return config;
}

ValidationResult validate_scenario(const Scenario& scenario) {
    const SystemConfig config = materialize_config(scenario);
    ValidationResult result = validate_config(config);
    ValidationResult generator = validate_generator(scenario.generator, config);
    for (auto& violation : generator.violations) {
        result.violations.push_back(std::move(violation));
    }
    return result;
}

}  // namespace gda
