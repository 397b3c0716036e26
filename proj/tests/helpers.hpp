#pragma once

#include <cstddef>
#include <vector>

#include "gda/rng.hpp"
#include "gda/types.hpp"

// Hand-rolled generators for property tests. Everything draws from a
// RandomStream the test seeds itself, so failures replay exactly.
namespace helpers {

// Minimal valid config: identity allocation tensors, even dataset split,
// generous bounds.
inline gda::SystemConfig make_config(int n, int k, double arrival_bound = 100.0,
                                     double service_bound = 100.0) {
    gda::SystemConfig config;
    config.num_dcs = n;
    config.num_job_types = k;
    for (int i = 0; i < n; ++i) config.dc_ids.push_back("dc" + std::to_string(i));
    config.it_power_per_job.assign(k, 1.0);
    config.arrival_bound.assign(k, arrival_bound);
    config.service_bound.assign(k, service_bound);
    const auto un = static_cast<std::size_t>(n);
    for (int t = 0; t < k; ++t) {
        gda::Matrix identity(un, un);
        for (std::size_t i = 0; i < un; ++i) identity(i, i) = 1.0;
        config.allocation_ratio.push_back(identity);
        config.dataset_distribution.emplace_back(un, 1.0 / n);
    }
    return config;
}

inline std::vector<double> random_simplex_vector(gda::RandomStream& stream, std::size_t n) {
    std::vector<double> v(n);
    double total = 0.0;
    for (auto& x : v) {
        x = stream.exponential();
        total += x;
    }
    for (auto& x : v) x /= total;
    return v;
}

// Row-stochastic n x n tensor with strictly positive entries.
inline gda::Matrix random_row_stochastic(gda::RandomStream& stream, std::size_t n) {
    gda::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = random_simplex_vector(stream, n);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
    }
    return m;
}

// Column-stochastic n x k decision with strictly positive entries.
inline gda::DecisionMatrix random_decision(gda::RandomStream& stream, std::size_t n,
                                           std::size_t k) {
    gda::Matrix m(n, k);
    for (std::size_t col = 0; col < k; ++col) {
        const auto column = random_simplex_vector(stream, n);
        for (std::size_t i = 0; i < n; ++i) m(i, col) = column[i];
    }
    return gda::DecisionMatrix{m};
}

inline gda::SlotObservation random_observation(gda::RandomStream& stream,
                                               const gda::SystemConfig& config,
                                               std::int64_t slot = 0) {
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);
    gda::SlotObservation obs;
    obs.slot_index = slot;
    for (std::size_t t = 0; t < k; ++t) {
        obs.arrivals.push_back(stream.uniform_in(0.0, config.arrival_bound[t]));
    }
    obs.service_rates = gda::Matrix(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            obs.service_rates(i, t) = stream.uniform_in(0.0, config.service_bound[t]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        obs.pue.push_back(stream.uniform_in(1.0, 2.0));
        obs.price_weight.push_back(stream.uniform_in(0.0, 150.0));
    }
    return obs;
}

inline gda::QueueState random_queues(gda::RandomStream& stream, std::size_t n, std::size_t k,
                                     double max_backlog = 50.0) {
    gda::Matrix q(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            q(i, t) = stream.uniform_in(0.0, max_backlog);
        }
    }
    return gda::QueueState{q};
}

}  // namespace helpers
