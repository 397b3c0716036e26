#pragma once

#include "gda/rng.hpp"
#include "gda/types.hpp"

namespace gda {

// DATA policy: each type's column equals its dataset distribution, every slot.
DecisionMatrix decide_data(const SystemConfig& config);

// RANDOM policy: for each type, one DC drawn uniformly gets the whole batch.
// Consumes one uniform per job type, in type order.
DecisionMatrix decide_random(const SystemConfig& config, RandomStream& stream);

}  // namespace gda
