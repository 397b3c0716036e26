#include "gda/cost.hpp"

#include <stdexcept>

namespace gda {

UnitCostMatrix unit_costs(const SystemConfig& config, const SlotObservation& obs) {
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);
    if (obs.pue.size() != n || obs.price_weight.size() != n ||
        config.allocation_ratio.size() != k || config.it_power_per_job.size() != k)
        throw std::invalid_argument("unit_costs: observation/config dimension mismatch");

    UnitCostMatrix result{Matrix(n, k)};
    for (std::size_t type = 0; type < k; ++type) {
        const Matrix& ratio = config.allocation_ratio[type];
        if (ratio.rows() != n || ratio.cols() != n)
            throw std::invalid_argument("unit_costs: allocation_ratio shape mismatch");
        const double power = config.it_power_per_job[type];
        for (std::size_t i = 0; i < n; ++i) {
            double u = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                u += obs.price_weight[j] * obs.pue[j] * ratio(i, j) * power;
            result.unit_cost(i, type) = u;
        }
    }
    return result;
}

double slot_cost(const UnitCostMatrix& unit, const SlotObservation& obs,
                 const DecisionMatrix& decision) {
    if (!unit.unit_cost.same_shape(decision.fractions))
        throw std::invalid_argument("slot_cost: decision/unit-cost shape mismatch");
    if (obs.arrivals.size() != unit.unit_cost.cols())
        throw std::invalid_argument("slot_cost: arrivals length mismatch");

    double cost = 0.0;
    for (std::size_t type = 0; type < unit.unit_cost.cols(); ++type) {
        const double arrived = obs.arrivals[type];
        for (std::size_t i = 0; i < unit.unit_cost.rows(); ++i)
            cost += decision.fractions(i, type) * arrived * unit.unit_cost(i, type);
    }
    return cost;
}

double slot_cost(const SystemConfig& config, const SlotObservation& obs,
                 const DecisionMatrix& decision) {
    return slot_cost(unit_costs(config, obs), obs, decision);
}

}  // namespace gda
