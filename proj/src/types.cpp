#include "gda/types.hpp"

#include <cmath>
#include <sstream>

#include "gda/format.hpp"

namespace gda {

namespace {

void add(ValidationResult& result, ViolationKind kind, std::string field, double observed,
         const std::string& what) {
    Violation v;
    v.kind = kind;
    v.field = std::move(field);
    v.observed = observed;
    v.message = v.field + " " + what + " (observed " + format_double(observed) + ")";
    result.violations.push_back(std::move(v));
}

void check_shape(ValidationResult& result, const std::string& field, std::size_t got,
                 std::size_t want) {
    if (got != want)
        add(result, ViolationKind::shape, field, static_cast<double>(got),
            "has length " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

std::string ValidationResult::to_string() const {
    if (ok()) return "OK";
    std::ostringstream out;
    for (const auto& v : violations) out << v.message << '\n';
    return out.str();
}

ValidationResult validate_config(const SystemConfig& config) {
    ValidationResult result;

    if (config.num_dcs <= 0)
        add(result, ViolationKind::range, "num_dcs", config.num_dcs, "must be positive");
    if (config.num_job_types <= 0)
        add(result, ViolationKind::range, "num_job_types", config.num_job_types,
            "must be positive");
    if (!result.ok()) return result;

    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    check_shape(result, "dc_ids", config.dc_ids.size(), n);
    check_shape(result, "it_power_per_job", config.it_power_per_job.size(), k);
    check_shape(result, "arrival_bound", config.arrival_bound.size(), k);
    check_shape(result, "service_bound", config.service_bound.size(), k);
    check_shape(result, "allocation_ratio", config.allocation_ratio.size(), k);
    check_shape(result, "dataset_distribution", config.dataset_distribution.size(), k);
    if (!result.ok()) return result;

    for (std::size_t j = 0; j < k; ++j) {
        const std::string kk = "[k=" + std::to_string(j) + "]";
        if (config.it_power_per_job[j] <= 0.0)
            add(result, ViolationKind::range, "it_power_per_job" + kk, config.it_power_per_job[j],
                "must be strictly positive");
        if (config.arrival_bound[j] <= 0.0)
            add(result, ViolationKind::range, "arrival_bound" + kk, config.arrival_bound[j],
                "must be strictly positive");
        if (config.service_bound[j] <= 0.0)
            add(result, ViolationKind::range, "service_bound" + kk, config.service_bound[j],
                "must be strictly positive");

        const Matrix& ratio = config.allocation_ratio[j];
        if (ratio.rows() != n || ratio.cols() != n) {
            add(result, ViolationKind::shape, "allocation_ratio" + kk,
                static_cast<double>(ratio.rows()),
                "has shape " + std::to_string(ratio.rows()) + "x" + std::to_string(ratio.cols()) +
                    ", expected " + std::to_string(n) + "x" + std::to_string(n));
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t m = 0; m < n; ++m) {
                    const double r = ratio(i, m);
                    if (r < 0.0 || r > 1.0)
                        add(result, ViolationKind::range,
                            "allocation_ratio" + kk + "[i=" + std::to_string(i) +
                                "][j=" + std::to_string(m) + "]",
                            r, "outside [0, 1]");
                }
                const double s = ratio.row_sum(i);
                if (std::abs(s - 1.0) > kSumTolerance)
                    add(result, ViolationKind::sum,
                        "allocation_ratio" + kk + "[i=" + std::to_string(i) + "]", s,
                        "sums to " + format_double(s) + ", expected 1");
            }
        }

        const auto& dist = config.dataset_distribution[j];
        if (dist.size() != n) {
            add(result, ViolationKind::shape, "dataset_distribution" + kk,
                static_cast<double>(dist.size()),
                "has length " + std::to_string(dist.size()) + ", expected " + std::to_string(n));
        } else {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (dist[i] < 0.0 || dist[i] > 1.0)
                    add(result, ViolationKind::range,
                        "dataset_distribution" + kk + "[i=" + std::to_string(i) + "]", dist[i],
                        "outside [0, 1]");
                s += dist[i];
            }
            if (std::abs(s - 1.0) > kSumTolerance)
                add(result, ViolationKind::sum, "dataset_distribution" + kk, s,
                    "sums to " + format_double(s) + ", expected 1");
        }
    }
    return result;
}

ValidationResult validate_observation(const SlotObservation& obs, const SystemConfig& config) {
    ValidationResult result;
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    check_shape(result, "arrivals", obs.arrivals.size(), k);
    check_shape(result, "pue", obs.pue.size(), n);
    check_shape(result, "price_weight", obs.price_weight.size(), n);
    if (obs.service_rates.rows() != n || obs.service_rates.cols() != k)
        add(result, ViolationKind::shape, "service_rates",
            static_cast<double>(obs.service_rates.rows()),
            "has shape " + std::to_string(obs.service_rates.rows()) + "x" +
                std::to_string(obs.service_rates.cols()) + ", expected " + std::to_string(n) +
                "x" + std::to_string(k));
    if (!result.ok()) return result;

    if (obs.slot_index < 0)
        add(result, ViolationKind::range, "slot_index", static_cast<double>(obs.slot_index),
            "must be non-negative");

    for (std::size_t j = 0; j < k; ++j) {
        const double a = obs.arrivals[j];
        if (a < 0.0)
            add(result, ViolationKind::range, "arrivals[" + std::to_string(j) + "]", a,
                "below 0");
        else if (a > config.arrival_bound[j])
            add(result, ViolationKind::range, "arrivals[" + std::to_string(j) + "]", a,
                "exceeds A_Max " + format_double(config.arrival_bound[j]));
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double mu = obs.service_rates(i, j);
            if (mu < 0.0)
                add(result, ViolationKind::range,
                    "service_rates[" + std::to_string(i) + "][" + std::to_string(j) + "]", mu,
                    "below 0");
            else if (mu > config.service_bound[j])
                add(result, ViolationKind::range,
                    "service_rates[" + std::to_string(i) + "][" + std::to_string(j) + "]", mu,
                    "exceeds mu_Max " + format_double(config.service_bound[j]));
        }
        if (obs.pue[i] < 1.0)
            add(result, ViolationKind::range, "pue[" + std::to_string(i) + "]", obs.pue[i],
                "below 1");
        if (obs.price_weight[i] < 0.0)
            add(result, ViolationKind::range, "price_weight[" + std::to_string(i) + "]",
                obs.price_weight[i], "below 0");
    }
    return result;
}

ValidationResult validate_decision(const DecisionMatrix& decision, const SystemConfig& config) {
    ValidationResult result;
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    if (decision.fractions.rows() != n || decision.fractions.cols() != k) {
        add(result, ViolationKind::shape, "fractions",
            static_cast<double>(decision.fractions.rows()),
            "has shape " + std::to_string(decision.fractions.rows()) + "x" +
                std::to_string(decision.fractions.cols()) + ", expected " + std::to_string(n) +
                "x" + std::to_string(k));
        return result;
    }

    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const double f = decision.fractions(i, j);
            if (f < 0.0 || f > 1.0)
                add(result, ViolationKind::range,
                    "fractions[" + std::to_string(i) + "][" + std::to_string(j) + "]", f,
                    "outside [0, 1]");
        }
        const double s = decision.fractions.col_sum(j);
        if (std::abs(s - 1.0) > kSumTolerance)
            add(result, ViolationKind::sum, "fractions[k=" + std::to_string(j) + "]", s,
                "sums to " + format_double(s) + ", expected 1");
    }
    return result;
}

}  // namespace gda
