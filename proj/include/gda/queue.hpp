#pragma once

#include <span>

#include "gda/types.hpp"

namespace gda {

// Relative tolerance for the per-slot quadratic drift bound check.
inline constexpr double kDriftBoundRelTol = 1e-6;

struct BacklogStats {
    double slot_total = 0.0;            // total backlog of the last state, jobs
    double running_time_average = 0.0;  // mean total backlog over the history, jobs
};

// One step of the queueing law, entrywise:
//   Q'(i,k) = max(Q(i,k) + fractions(i,k) * arrivals[k] - service_rates(i,k), 0)
// Never mutates the input state.
QueueState advance_queues(const QueueState& state, const DecisionMatrix& decision,
                          const SlotObservation& obs);

// slot_total of the last state plus the time average over the whole history.
// Throws std::invalid_argument on an empty history.
BacklogStats backlog_stats(std::span<const QueueState> history);

double total_backlog(const QueueState& state);

// Quadratic backlog potential: 1/2 * sum_{i,k} Q(i,k)^2.
double lyapunov(const QueueState& state);

// Per-slot noise term of the quadratic drift expansion:
//   1/2 * sum_{i,k} [ (fractions(i,k) * arrivals[k])^2 + service_rates(i,k)^2 ]
double slot_noise_bound(const DecisionMatrix& decision, const SlotObservation& obs);

// Backlog-weighted net inflow: sum_{i,k} Q(i,k) * (fractions(i,k) * arrivals[k]
// - service_rates(i,k)).
double queue_weighted_drift(const QueueState& state, const DecisionMatrix& decision,
                            const SlotObservation& obs);

// Worst-case noise constant from the bounds alone:
//   1/2 * N * sum_k arrival_bound[k]^2 + 1/2 * N * sum_k service_bound[k]^2
// Dominates slot_noise_bound at every slot.
double worst_case_noise_bound(const SystemConfig& config);

// Realized one-slot drift bound check: with next = advance_queues(state, ...),
//   lyapunov(next) - lyapunov(state) <= slot_noise_bound + queue_weighted_drift
// holds entrywise-algebraically. `gap` is (lhs - rhs) / max(1, |rhs|); values
// above kDriftBoundRelTol indicate a broken update path.
struct DriftBoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    bool holds = true;
};

DriftBoundCheck check_drift_bound(const QueueState& state, const DecisionMatrix& decision,
                                  const SlotObservation& obs, const QueueState& next);

}  // namespace gda
