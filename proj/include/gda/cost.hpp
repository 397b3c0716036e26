#pragma once

#include "gda/types.hpp"

namespace gda {

// Per-job unit cost of every (manager, type) pair for one slot:
//   u[i][k] = sum_j price_weight[j] * pue[j] * ratio[k](i,j) * it_power[k]
// Throws std::invalid_argument on dimension mismatch.
UnitCostMatrix unit_costs(const SystemConfig& config, const SlotObservation& obs);

// Realized energy cost of the slot under the given decision:
//   Cost(t) = sum_k sum_i fractions(i,k) * arrivals[k] * unit_cost(i,k)
// Linear in the decision, non-negative.
double slot_cost(const UnitCostMatrix& unit, const SlotObservation& obs,
                 const DecisionMatrix& decision);

// Convenience form that computes the unit costs itself.
double slot_cost(const SystemConfig& config, const SlotObservation& obs,
                 const DecisionMatrix& decision);

}  // namespace gda
