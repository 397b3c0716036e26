#include "fixtures.hpp"

namespace fixtures {

gda::Scenario reference_scenario() {
    gda::Scenario scenario;

    gda::SystemConfig& system = scenario.system;
    system.num_dcs = 4;
    system.num_job_types = 1;
    system.dc_ids = {"dc-a", "dc-b", "dc-c", "dc-d"};
    system.it_power_per_job = {1.0};
    system.arrival_bound = {120.0};
    system.service_bound = {72.0};
    system.allocation_ratio = {gda::Matrix::from_rows({
        {0.7, 0.15, 0.1, 0.05},
        {0.2, 0.65, 0.1, 0.05},
        {0.2, 0.15, 0.6, 0.05},
        {0.2, 0.15, 0.1, 0.55},
    })};
    system.dataset_distribution = {{0.4, 0.3, 0.2, 0.1}};

    gda::GeneratorSpec& generator = scenario.generator;
    generator.seed = 1;
    generator.arrival.kind = gda::ArrivalKind::poisson;
    generator.arrival.rate_per_slot = {40.5};
    generator.service.kind = gda::ServiceKind::uniform_integer;
    generator.service.lo = gda::Matrix::from_rows({{48.0}, {44.0}, {24.0}, {20.0}});
    generator.service.hi = gda::Matrix::from_rows({{72.0}, {66.0}, {36.0}, {30.0}});
    generator.pue.kind = gda::PueKind::sinusoidal_diurnal;
    generator.pue.base = {1.45, 1.35, 1.12, 1.3};
    generator.pue.amplitude = {0.15, 0.15, 0.07, 0.1};
    generator.pue.phase_slots = {0.0, 48.0, 96.0, 144.0};
    generator.pue.period_slots = 288;
    generator.price.kind = gda::PriceKind::step_schedule;
    generator.price.levels = {
        {100.0, 140.0, 180.0, 140.0, 100.0, 80.0, 80.0, 90.0},
        {60.0, 60.0, 80.0, 100.0, 120.0, 100.0, 80.0, 60.0},
        {30.0, 30.0, 40.0, 40.0, 50.0, 40.0, 30.0, 30.0},
        {50.0, 40.0, 60.0, 80.0, 80.0, 60.0, 50.0, 40.0},
    };
    generator.price.slots_per_step = 36;

    scenario.horizon = 288;
    scenario.v_values = {0.001, 0.01, 0.1, 1.0, 10.0, 100.0};
    scenario.schedulers = {"gmsa", "data", "random"};
    scenario.tie_break = gda::TieBreak::lowest_index;
    scenario.replications = 1;
    scenario.output_dir = "out/reference";
    return scenario;
}

gda::Scenario imbalanced_scenario() {
    gda::Scenario scenario = reference_scenario();
    scenario.generator.service.lo(0, 0) = 8.0;
    scenario.generator.service.hi(0, 0) = 12.0;
    scenario.v_values = {1.0};
    scenario.schedulers = {"gmsa", "data"};
    scenario.output_dir = "out/imbalanced";
    return scenario;
}

}  // namespace fixtures
