#include "gda/baselines.hpp"

namespace gda {

DecisionMatrix decide_data(const SystemConfig& config) {
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    DecisionMatrix decision{Matrix(n, k)};
    for (std::size_t type = 0; type < k; ++type)
        for (std::size_t i = 0; i < n; ++i)
            decision.fractions(i, type) = config.dataset_distribution[type][i];
    return decision;
}

DecisionMatrix decide_random(const SystemConfig& config, RandomStream& stream) {
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);

    DecisionMatrix decision{Matrix(n, k)};
    for (std::size_t type = 0; type < k; ++type) {
        const auto pick = static_cast<std::size_t>(
            stream.uniform_int(0, static_cast<std::int64_t>(n) - 1));
        decision.fractions(pick, type) = 1.0;
    }
    return decision;
}

}  // namespace gda
