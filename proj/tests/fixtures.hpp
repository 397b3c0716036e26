#pragma once

#include "gda/scenario.hpp"

namespace fixtures {

// The pinned 4-DC, 1-type scenario every trend criterion runs against:
// Poisson arrivals at 40.5 jobs per 5-minute slot, heterogeneous uniform
// service bands (means 60/55/30/25, +-20%), diurnal PUE inside [1.05, 1.6],
// step prices spread >= 2x between the dearest and cheapest site, and a
// locality-biased allocation tensor. Must stay equal to
// scenarios/reference.json.
gda::Scenario reference_scenario();

// Same system but DC a's service band drops to [8, 12]: the DATA policy
// keeps routing 40% of load into a site that can serve only ~25% of it.
// Must stay equal to scenarios/imbalanced.json.
gda::Scenario imbalanced_scenario();

}  // namespace fixtures
