#pragma once

#include "gda/types.hpp"

namespace gda {

enum class TieBreak {
    lowest_index,
    lowest_unit_cost,
};

struct GmsaParams {
    double v = 1.0;  // >= 0; larger pushes cost down at the price of backlog
    TieBreak tie_break = TieBreak::lowest_index;
};

// Per-(DC, type) objective coefficient of the slot decision:
//   c(i,k) = arrivals[k] * ((Q(i,k) - service_rates(i,k)) + v * unit_cost(i,k))
// The decision-independent -Q(i,k)*service_rates(i,k) terms are dropped here
// and restored by drift_plus_penalty_value.
struct CoefficientMatrix {
    Matrix coefficients;  // N x K
};

CoefficientMatrix build_coefficients(const QueueState& state, const SlotObservation& obs,
                                     const UnitCostMatrix& unit, const GmsaParams& params);

// Minimizes sum_i fractions(i,k) * c(i,k) over each per-type simplex. The
// optimum sits at a vertex, so each column gets full mass on the coefficient
// argmin. Ties follow params.tie_break; lowest_unit_cost needs `unit` and
// falls back to the lower index when unit costs tie too.
DecisionMatrix decide(const CoefficientMatrix& coeffs, const GmsaParams& params,
                      const UnitCostMatrix* unit = nullptr);

// Test oracle: evaluates the column objective at every simplex vertex and
// keeps the best (lowest index on ties). Exact for a linear objective; meant
// for small N.
DecisionMatrix lp_oracle(const CoefficientMatrix& coeffs);

// Full slot objective for diagnostics, constant terms included:
//   sum_{i,k} [ fractions*arrivals*(Q - mu) - Q*mu ] + v * Cost(t)
double drift_plus_penalty_value(const QueueState& state, const SlotObservation& obs,
                                const UnitCostMatrix& unit, const DecisionMatrix& decision,
                                const GmsaParams& params);

}  // namespace gda
