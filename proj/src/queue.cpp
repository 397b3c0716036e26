#include "gda/queue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gda {

QueueState advance_queues(const QueueState& state, const DecisionMatrix& decision,
                          const SlotObservation& obs) {
    const Matrix& q = state.backlogs;
    if (!q.same_shape(decision.fractions) || !q.same_shape(obs.service_rates) ||
        obs.arrivals.size() != q.cols())
        throw std::invalid_argument("advance_queues: dimension mismatch");

    QueueState next{Matrix(q.rows(), q.cols())};
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t k = 0; k < q.cols(); ++k) {
            const double inflow = decision.fractions(i, k) * obs.arrivals[k];
            next.backlogs(i, k) = std::max(q(i, k) + inflow - obs.service_rates(i, k), 0.0);
        }
    }
    return next;
}

BacklogStats backlog_stats(std::span<const QueueState> history) {
    if (history.empty()) throw std::invalid_argument("backlog_stats: empty history");

    BacklogStats stats;
    double sum = 0.0;
    for (const QueueState& state : history) sum += total_backlog(state);
    stats.slot_total = total_backlog(history.back());
    stats.running_time_average = sum / static_cast<double>(history.size());
    return stats;
}

double total_backlog(const QueueState& state) { return state.backlogs.sum(); }

double lyapunov(const QueueState& state) {
    double s = 0.0;
    for (double q : state.backlogs.data()) s += q * q;
    return 0.5 * s;
}

double slot_noise_bound(const DecisionMatrix& decision, const SlotObservation& obs) {
    double s = 0.0;
    for (std::size_t i = 0; i < decision.fractions.rows(); ++i) {
        for (std::size_t k = 0; k < decision.fractions.cols(); ++k) {
            const double inflow = decision.fractions(i, k) * obs.arrivals[k];
            const double mu = obs.service_rates(i, k);
            s += inflow * inflow + mu * mu;
        }
    }
    return 0.5 * s;
}

double queue_weighted_drift(const QueueState& state, const DecisionMatrix& decision,
                            const SlotObservation& obs) {
    double s = 0.0;
    for (std::size_t i = 0; i < state.backlogs.rows(); ++i) {
        for (std::size_t k = 0; k < state.backlogs.cols(); ++k) {
            const double inflow = decision.fractions(i, k) * obs.arrivals[k];
            s += state.backlogs(i, k) * (inflow - obs.service_rates(i, k));
        }
    }
    return s;
}

double worst_case_noise_bound(const SystemConfig& config) {
    double arrivals_sq = 0.0;
    double service_sq = 0.0;
    for (int k = 0; k < config.num_job_types; ++k) {
        arrivals_sq += config.arrival_bound[k] * config.arrival_bound[k];
        service_sq += config.service_bound[k] * config.service_bound[k];
    }
    const double n = static_cast<double>(config.num_dcs);
    return 0.5 * n * arrivals_sq + 0.5 * n * service_sq;
}

DriftBoundCheck check_drift_bound(const QueueState& state, const DecisionMatrix& decision,
                                  const SlotObservation& obs, const QueueState& next) {
    DriftBoundCheck check;
    check.lhs = lyapunov(next) - lyapunov(state);
    check.rhs = slot_noise_bound(decision, obs) + queue_weighted_drift(state, decision, obs);
    check.gap = (check.lhs - check.rhs) / std::max(1.0, std::abs(check.rhs));
    check.holds = check.gap <= kDriftBoundRelTol;
    return check;
}

}  // namespace gda
