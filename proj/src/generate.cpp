#include "gda/generate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "gda/trace.hpp"

namespace gda {

namespace {

void add(ValidationResult& result, ViolationKind kind, std::string field, double observed,
         const std::string& what) {
    Violation v;
    v.kind = kind;
    v.field = std::move(field);
    v.observed = observed;
    v.message = v.field + " " + what;
    result.violations.push_back(std::move(v));
}

void check_matrix_shape(ValidationResult& result, const std::string& field, const Matrix& m,
                        std::size_t rows, std::size_t cols) {
    if (m.rows() != rows || m.cols() != cols)
        add(result, ViolationKind::shape, field, static_cast<double>(m.rows()),
            "has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
}

void check_vector_shape(ValidationResult& result, const std::string& field, std::size_t got,
                        std::size_t want) {
    if (got != want)
        add(result, ViolationKind::shape, field, static_cast<double>(got),
            "has length " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

ValidationResult validate_generator(const GeneratorSpec& spec, const SystemConfig& config) {
    ValidationResult result;
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    check_vector_shape(result, "arrival.rate_per_slot", spec.arrival.rate_per_slot.size(), k);
    for (std::size_t j = 0; j < spec.arrival.rate_per_slot.size(); ++j)
        if (spec.arrival.rate_per_slot[j] < 0.0)
            add(result, ViolationKind::range, "arrival.rate_per_slot[" + std::to_string(j) + "]",
                spec.arrival.rate_per_slot[j], "below 0");

    switch (spec.service.kind) {
        case ServiceKind::uniform_integer: {
            check_matrix_shape(result, "service.lo", spec.service.lo, n, k);
            check_matrix_shape(result, "service.hi", spec.service.hi, n, k);
            if (spec.service.lo.rows() == n && spec.service.lo.cols() == k &&
                spec.service.hi.rows() == n && spec.service.hi.cols() == k) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        const std::string at =
                            "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
                        if (spec.service.lo(i, j) < 0.0)
                            add(result, ViolationKind::range, "service.lo" + at,
                                spec.service.lo(i, j), "below 0");
                        if (spec.service.lo(i, j) > spec.service.hi(i, j))
                            add(result, ViolationKind::range, "service.lo" + at,
                                spec.service.lo(i, j), "exceeds service.hi");
                        if (spec.service.hi(i, j) > config.service_bound[j])
                            add(result, ViolationKind::range, "service.hi" + at,
                                spec.service.hi(i, j), "exceeds service_bound");
                    }
                }
            }
            break;
        }
        case ServiceKind::truncated_poisson: {
            check_matrix_shape(result, "service.rate", spec.service.rate, n, k);
            for (std::size_t i = 0; i < spec.service.rate.rows(); ++i)
                for (std::size_t j = 0; j < spec.service.rate.cols(); ++j)
                    if (spec.service.rate(i, j) < 0.0)
                        add(result, ViolationKind::range,
                            "service.rate[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                            spec.service.rate(i, j), "below 0");
            break;
        }
    }

    switch (spec.pue.kind) {
        case PueKind::constant:
            check_vector_shape(result, "pue.value", spec.pue.value.size(), n);
            for (std::size_t i = 0; i < spec.pue.value.size(); ++i)
                if (spec.pue.value[i] < 1.0)
                    add(result, ViolationKind::range, "pue.value[" + std::to_string(i) + "]",
                        spec.pue.value[i], "below 1");
            break;
        case PueKind::sinusoidal_diurnal:
            check_vector_shape(result, "pue.base", spec.pue.base.size(), n);
            check_vector_shape(result, "pue.amplitude", spec.pue.amplitude.size(), n);
            check_vector_shape(result, "pue.phase_slots", spec.pue.phase_slots.size(), n);
            if (spec.pue.period_slots <= 0)
                add(result, ViolationKind::range, "pue.period_slots", spec.pue.period_slots,
                    "must be positive");
            for (std::size_t i = 0;
                 i < std::min(spec.pue.base.size(), spec.pue.amplitude.size()); ++i) {
                if (spec.pue.amplitude[i] < 0.0)
                    add(result, ViolationKind::range, "pue.amplitude[" + std::to_string(i) + "]",
                        spec.pue.amplitude[i], "below 0");
                if (spec.pue.base[i] - spec.pue.amplitude[i] < 1.0)
                    add(result, ViolationKind::range, "pue.base[" + std::to_string(i) + "]",
                        spec.pue.base[i] - spec.pue.amplitude[i],
                        "minus amplitude drops below 1");
            }
            break;
        case PueKind::file:
            if (spec.pue.path.empty())
                add(result, ViolationKind::shape, "pue.path", 0.0, "must not be empty");
            break;
    }

    switch (spec.price.kind) {
        case PriceKind::constant:
            check_vector_shape(result, "price.value", spec.price.value.size(), n);
            for (std::size_t i = 0; i < spec.price.value.size(); ++i)
                if (spec.price.value[i] < 0.0)
                    add(result, ViolationKind::range, "price.value[" + std::to_string(i) + "]",
                        spec.price.value[i], "below 0");
            break;
        case PriceKind::step_schedule:
            check_vector_shape(result, "price.levels", spec.price.levels.size(), n);
            if (spec.price.slots_per_step <= 0)
                add(result, ViolationKind::range, "price.slots_per_step",
                    spec.price.slots_per_step, "must be positive");
            for (std::size_t i = 0; i < spec.price.levels.size(); ++i) {
                if (spec.price.levels[i].empty())
                    add(result, ViolationKind::shape, "price.levels[" + std::to_string(i) + "]",
                        0.0, "must not be empty");
                for (std::size_t s = 0; s < spec.price.levels[i].size(); ++s)
                    if (spec.price.levels[i][s] < 0.0)
                        add(result, ViolationKind::range,
                            "price.levels[" + std::to_string(i) + "][" + std::to_string(s) + "]",
                            spec.price.levels[i][s], "below 0");
            }
            break;
        case PriceKind::file:
            if (spec.price.path.empty())
                add(result, ViolationKind::shape, "price.path", 0.0, "must not be empty");
            break;
    }

    if (spec.ratio && spec.ratio->kind == RatioKind::file && spec.ratio->path.empty())
        add(result, ViolationKind::shape, "ratio.path", 0.0, "must not be empty");

    return result;
}

namespace {

double pue_at(const PueSpec& spec, const TraceSeries* trace, std::size_t dc, std::int64_t slot) {
    switch (spec.kind) {
        case PueKind::constant:
            return spec.value[dc];
        case PueKind::sinusoidal_diurnal: {
            const double phase = (static_cast<double>(slot) + spec.phase_slots[dc]) /
                                 static_cast<double>(spec.period_slots);
            return spec.base[dc] +
                   spec.amplitude[dc] * std::sin(2.0 * std::numbers::pi * phase);
        }
        case PueKind::file: {
            const auto t = static_cast<std::size_t>(slot) % trace->values.rows();
            return trace->values(t, dc);
        }
    }
    return 1.0;
}

double price_at(const PriceSpec& spec, const TraceSeries* trace, std::size_t dc,
                std::int64_t slot) {
    switch (spec.kind) {
        case PriceKind::constant:
            return spec.value[dc];
        case PriceKind::step_schedule: {
            const auto step = static_cast<std::size_t>(slot / spec.slots_per_step);
            const auto& cycle = spec.levels[dc];
            return cycle[step % cycle.size()];
        }
        case PriceKind::file: {
            const auto t = static_cast<std::size_t>(slot) % trace->values.rows();
            return trace->values(t, dc);
        }
    }
    return 0.0;
}

}  // namespace

std::vector<SlotObservation> generate_observations(const GeneratorSpec& spec,
                                                   const SystemConfig& config, int horizon) {
    if (horizon <= 0) throw GeneratorError("generate_observations: horizon must be positive");
    const auto check = validate_generator(spec, config);
    if (!check.ok()) throw GeneratorError("invalid generator spec:\n" + check.to_string());

    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    // File-backed series are loaded once and cycled past their end.
    std::optional<TraceSeries> pue_trace;
    if (spec.pue.kind == PueKind::file)
        pue_trace = load_trace(spec.pue.path, TraceKind::pue, config);
    std::optional<TraceSeries> price_trace;
    if (spec.price.kind == PriceKind::file)
        price_trace = load_trace(spec.price.path, TraceKind::price_weight, config);

    RandomStream stream(derive_seed(spec.seed, seed_index::observations));
    std::vector<SlotObservation> observations;
    observations.reserve(static_cast<std::size_t>(horizon));

    for (int t = 0; t < horizon; ++t) {
        SlotObservation obs;
        obs.slot_index = t;

        obs.arrivals.resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            const double draw =
                static_cast<double>(stream.poisson(spec.arrival.rate_per_slot[j]));
            obs.arrivals[j] = std::min(draw, config.arrival_bound[j]);
        }

        obs.service_rates = Matrix(n, k);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                double mu = 0.0;
                if (spec.service.kind == ServiceKind::uniform_integer) {
                    mu = static_cast<double>(stream.uniform_int(
                        static_cast<std::int64_t>(spec.service.lo(i, j)),
                        static_cast<std::int64_t>(spec.service.hi(i, j))));
                } else {
                    mu = static_cast<double>(stream.poisson(spec.service.rate(i, j)));
                }
                obs.service_rates(i, j) = std::min(mu, config.service_bound[j]);
            }
        }

        obs.pue.resize(n);
        obs.price_weight.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            obs.pue[i] = pue_at(spec.pue, pue_trace ? &*pue_trace : nullptr, i, t);
            obs.price_weight[i] =
                price_at(spec.price, price_trace ? &*price_trace : nullptr, i, t);
        }

        observations.push_back(std::move(obs));
    }
    return observations;
}

std::vector<Matrix> generate_ratios(const GeneratorSpec& spec, const SystemConfig& config) {
    if (!spec.ratio) throw GeneratorError("generate_ratios: spec.ratio is not set");

    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);
    std::vector<Matrix> tensors;
    tensors.reserve(k);

    switch (spec.ratio->kind) {
        case RatioKind::dataset_proportional: {
            if (config.dataset_distribution.size() != k)
                throw GeneratorError("generate_ratios: dataset_distribution count mismatch");
            for (std::size_t type = 0; type < k; ++type) {
                const auto& dist = config.dataset_distribution[type];
                if (dist.size() != n)
                    throw GeneratorError("generate_ratios: dataset_distribution length mismatch");
                Matrix ratio(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) ratio(i, j) = dist[j];
                tensors.push_back(std::move(ratio));
            }
            break;
        }
        case RatioKind::dirichlet_random: {
            // Each row is N independent exponentials normalized to sum 1,
            // i.e. a flat Dirichlet draw. Draw order: type, row, column.
            RandomStream stream(derive_seed(spec.seed, seed_index::ratio));
            for (std::size_t type = 0; type < k; ++type) {
                Matrix ratio(n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    double total = 0.0;
                    for (std::size_t j = 0; j < n; ++j) {
                        ratio(i, j) = stream.exponential();
                        total += ratio(i, j);
                    }
                    for (std::size_t j = 0; j < n; ++j) ratio(i, j) /= total;
                }
                tensors.push_back(std::move(ratio));
            }
            break;
        }
        case RatioKind::file: {
            std::ifstream in(spec.ratio->path);
            if (!in)
                throw GeneratorError("generate_ratios: cannot open " + spec.ratio->path);
            nlohmann::json doc;
            try {
                in >> doc;
            } catch (const nlohmann::json::exception& e) {
                throw GeneratorError("generate_ratios: bad JSON in " + spec.ratio->path + ": " +
                                     e.what());
            }
            if (!doc.is_array() || doc.size() != k)
                throw GeneratorError("generate_ratios: expected " + std::to_string(k) +
                                     " tensors in " + spec.ratio->path);
            for (const auto& tensor : doc) {
                if (!tensor.is_array() || tensor.size() != n)
                    throw GeneratorError("generate_ratios: tensor must have " +
                                         std::to_string(n) + " rows");
                Matrix ratio(n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    const auto& row = tensor[i];
                    if (!row.is_array() || row.size() != n)
                        throw GeneratorError("generate_ratios: row must have " +
                                             std::to_string(n) + " entries");
                    for (std::size_t j = 0; j < n; ++j) ratio(i, j) = row[j].get<double>();
                }
                tensors.push_back(std::move(ratio));
            }
            break;
        }
    }
    return tensors;
}

}  // namespace gda
