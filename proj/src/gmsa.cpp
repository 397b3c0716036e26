#include "gda/gmsa.hpp"

#include <cmath>
#include <stdexcept>

#include "gda/cost.hpp"

namespace gda {

CoefficientMatrix build_coefficients(const QueueState& state, const SlotObservation& obs,
                                     const UnitCostMatrix& unit, const GmsaParams& params) {
    const Matrix& q = state.backlogs;
    if (!q.same_shape(obs.service_rates) || !q.same_shape(unit.unit_cost) ||
        obs.arrivals.size() != q.cols())
        throw std::invalid_argument("build_coefficients: dimension mismatch");
    if (params.v < 0.0) throw std::invalid_argument("build_coefficients: v must be >= 0");

    CoefficientMatrix coeffs{Matrix(q.rows(), q.cols())};
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t k = 0; k < q.cols(); ++k)
            coeffs.coefficients(i, k) =
                obs.arrivals[k] *
                ((q(i, k) - obs.service_rates(i, k)) + params.v * unit.unit_cost(i, k));
    return coeffs;
}

DecisionMatrix decide(const CoefficientMatrix& coeffs, const GmsaParams& params,
                      const UnitCostMatrix* unit) {
    const Matrix& c = coeffs.coefficients;
    if (params.tie_break == TieBreak::lowest_unit_cost) {
        if (unit == nullptr)
            throw std::invalid_argument("decide: lowest_unit_cost tie break needs unit costs");
        if (!unit->unit_cost.same_shape(c))
            throw std::invalid_argument("decide: unit-cost shape mismatch");
    }

    DecisionMatrix decision{Matrix(c.rows(), c.cols())};
    for (std::size_t k = 0; k < c.cols(); ++k) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < c.rows(); ++i) {
            if (c(i, k) < c(best, k)) {
                best = i;
            } else if (c(i, k) == c(best, k) && params.tie_break == TieBreak::lowest_unit_cost &&
                       unit->unit_cost(i, k) < unit->unit_cost(best, k)) {
                best = i;
            }
        }
        decision.fractions(best, k) = 1.0;
    }
    return decision;
}

DecisionMatrix lp_oracle(const CoefficientMatrix& coeffs) {
    const Matrix& c = coeffs.coefficients;
    DecisionMatrix decision{Matrix(c.rows(), c.cols())};
    for (std::size_t k = 0; k < c.cols(); ++k) {
        // Evaluate sum_i e_v(i) * c(i,k) at each vertex e_v of the simplex.
        std::size_t best = 0;
        double best_value = 0.0;
        for (std::size_t v = 0; v < c.rows(); ++v) {
            double value = 0.0;
            for (std::size_t i = 0; i < c.rows(); ++i) value += (i == v ? 1.0 : 0.0) * c(i, k);
            if (v == 0 || value < best_value) {
                best = v;
                best_value = value;
            }
        }
        decision.fractions(best, k) = 1.0;
    }
    return decision;
}

double drift_plus_penalty_value(const QueueState& state, const SlotObservation& obs,
                                const UnitCostMatrix& unit, const DecisionMatrix& decision,
                                const GmsaParams& params) {
    const Matrix& q = state.backlogs;
    if (!q.same_shape(decision.fractions) || !q.same_shape(obs.service_rates))
        throw std::invalid_argument("drift_plus_penalty_value: dimension mismatch");

    double value = 0.0;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t k = 0; k < q.cols(); ++k) {
            const double mu = obs.service_rates(i, k);
            value += decision.fractions(i, k) * obs.arrivals[k] * (q(i, k) - mu) - q(i, k) * mu;
        }
    }
    return value + params.v * slot_cost(unit, obs, decision);
}

}  // namespace gda
