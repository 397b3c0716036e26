#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gda/generate.hpp"
#include "gda/trace.hpp"
#include "fixtures.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;

TEST_SUITE_BEGIN("generate");

namespace {

fs::path temp_dir() {
    const auto dir = fs::temp_directory_path() / "gda-generate-tests";
    fs::create_directories(dir);
    return dir;
}

// Simplest spec that validates against make_config(n, k): constant unit PUE,
// free energy, deterministic service band.
gda::GeneratorSpec make_spec(const gda::SystemConfig& config, std::uint64_t seed = 7) {
    const auto n = static_cast<std::size_t>(config.num_dcs);
    const auto k = static_cast<std::size_t>(config.num_job_types);
    gda::GeneratorSpec spec;
    spec.seed = seed;
    spec.arrival.rate_per_slot.assign(k, 5.0);
    spec.service.kind = gda::ServiceKind::uniform_integer;
    spec.service.lo = gda::Matrix(n, k, 2.0);
    spec.service.hi = gda::Matrix(n, k, 5.0);
    spec.pue.kind = gda::PueKind::constant;
    spec.pue.value.assign(n, 1.0);
    spec.price.kind = gda::PriceKind::constant;
    spec.price.value.assign(n, 0.0);
    return spec;
}

bool has_violation(const gda::ValidationResult& result, gda::ViolationKind kind,
                   const std::string& field) {
    return std::any_of(result.violations.begin(), result.violations.end(),
                       [&](const gda::Violation& v) { return v.kind == kind && v.field == field; });
}

}  // namespace

TEST_CASE("zero arrival rate yields zero arrivals every slot") {
    const auto config = helpers::make_config(2, 2);
    auto spec = make_spec(config);
    spec.arrival.rate_per_slot.assign(2, 0.0);
    for (const auto& obs : gda::generate_observations(spec, config, 50)) {
        CHECK(obs.arrivals[0] == 0.0);
        CHECK(obs.arrivals[1] == 0.0);
    }
}

TEST_CASE("the same seed reproduces the stream, a different seed does not") {
    const auto config = helpers::make_config(3, 2);
    const auto spec = make_spec(config, 99);
    const auto a = gda::generate_observations(spec, config, 40);
    const auto b = gda::generate_observations(spec, config, 40);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
        CHECK(a[t].arrivals == b[t].arrivals);
        CHECK(a[t].service_rates == b[t].service_rates);
    }

    const auto c = gda::generate_observations(make_spec(config, 100), config, 40);
    bool any_diff = false;
    for (std::size_t t = 0; t < a.size(); ++t)
        any_diff = any_diff || a[t].arrivals != c[t].arrivals;
    CHECK(any_diff);
}

TEST_CASE("poisson arrivals hit their rate over a long horizon") {
    auto config = helpers::make_config(1, 1, 1000.0);
    auto spec = make_spec(config);
    spec.arrival.rate_per_slot = {40.5};
    const auto observations = gda::generate_observations(spec, config, 10000);
    double total = 0.0;
    for (const auto& obs : observations) total += obs.arrivals[0];
    CHECK(total / 10000.0 == doctest::Approx(40.5).epsilon(0.02));
}

TEST_CASE("arrivals clamp at the configured bound") {
    auto config = helpers::make_config(1, 1, 3.0);
    auto spec = make_spec(config);
    spec.arrival.rate_per_slot = {40.5};
    for (const auto& obs : gda::generate_observations(spec, config, 200))
        CHECK(obs.arrivals[0] <= 3.0);
}

TEST_CASE("uniform_integer service stays integral inside its band") {
    const auto config = helpers::make_config(2, 2);
    const auto spec = make_spec(config);
    for (const auto& obs : gda::generate_observations(spec, config, 100)) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const double mu = obs.service_rates(i, j);
                CHECK(mu >= 2.0);
                CHECK(mu <= 5.0);
                CHECK(mu == std::floor(mu));
            }
        }
    }
}

TEST_CASE("truncated_poisson service clamps at the service bound") {
    auto config = helpers::make_config(2, 1, 100.0, 10.0);
    auto spec = make_spec(config);
    spec.service.kind = gda::ServiceKind::truncated_poisson;
    spec.service.rate = gda::Matrix(2, 1, 50.0);
    bool clamped = false;
    for (const auto& obs : gda::generate_observations(spec, config, 200)) {
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(obs.service_rates(i, 0) <= 10.0);
            CHECK(obs.service_rates(i, 0) == std::floor(obs.service_rates(i, 0)));
            clamped = clamped || obs.service_rates(i, 0) == 10.0;
        }
    }
    // Poisson(50) almost never lands below 10, so the cap must have bitten.
    CHECK(clamped);
}

TEST_CASE("sinusoidal pue starts at base, stays inside the band, and repeats") {
    const auto config = helpers::make_config(2, 1);
    auto spec = make_spec(config);
    spec.pue.kind = gda::PueKind::sinusoidal_diurnal;
    spec.pue.value.clear();
    spec.pue.base = {1.4, 1.2};
    spec.pue.amplitude = {0.3, 0.1};
    spec.pue.phase_slots = {0.0, 24.0};
    spec.pue.period_slots = 96;

    const auto observations = gda::generate_observations(spec, config, 2 * 96);
    CHECK(observations[0].pue[0] == 1.4);  // sin(0) is exact
    for (const auto& obs : observations) {
        CHECK(obs.pue[0] >= 1.4 - 0.3 - 1e-12);
        CHECK(obs.pue[0] <= 1.4 + 0.3 + 1e-12);
        CHECK(obs.pue[1] >= 1.2 - 0.1 - 1e-12);
        CHECK(obs.pue[1] <= 1.2 + 0.1 + 1e-12);
    }
    // One full period later the curve comes back around.
    for (std::size_t t = 0; t < 96; ++t)
        CHECK(observations[t].pue[0] ==
              doctest::Approx(observations[t + 96].pue[0]).epsilon(1e-9));
    // The second DC is a quarter period ahead: its peak sits where the phase
    // offset plus the slot puts sin at 1.
    CHECK(observations[0].pue[1] == doctest::Approx(1.2 + 0.1).epsilon(1e-9));
}

TEST_CASE("step schedule prices hold each level then advance and wrap") {
    const auto config = helpers::make_config(1, 1);
    auto spec = make_spec(config);
    spec.price.kind = gda::PriceKind::step_schedule;
    spec.price.value.clear();
    spec.price.levels = {{10.0, 20.0, 30.0}};
    spec.price.slots_per_step = 4;

    const auto observations = gda::generate_observations(spec, config, 14);
    CHECK(observations[0].price_weight[0] == 10.0);
    CHECK(observations[3].price_weight[0] == 10.0);
    CHECK(observations[4].price_weight[0] == 20.0);
    CHECK(observations[8].price_weight[0] == 30.0);
    CHECK(observations[11].price_weight[0] == 30.0);
    CHECK(observations[12].price_weight[0] == 10.0);  // cycle wraps
}

TEST_CASE("file-backed pue and price cycle past the end of the trace") {
    const auto config = helpers::make_config(2, 1);
    const auto pue_path = temp_dir() / "pue.csv";
    {
        std::ofstream out(pue_path, std::ios::binary);
        out << "slot,dc0,dc1\n0,1.1,1.2\n1,1.3,1.4\n2,1.5,1.6\n";
    }
    const auto price_path = temp_dir() / "price.csv";
    {
        std::ofstream out(price_path, std::ios::binary);
        out << "slot,dc0,dc1\n0,10,11\n1,20,21\n";
    }
    auto spec = make_spec(config);
    spec.pue.kind = gda::PueKind::file;
    spec.pue.value.clear();
    spec.pue.path = pue_path.string();
    spec.price.kind = gda::PriceKind::file;
    spec.price.value.clear();
    spec.price.path = price_path.string();

    const auto observations = gda::generate_observations(spec, config, 7);
    const double want_pue[] = {1.1, 1.3, 1.5};
    const double want_price[] = {10.0, 20.0};
    for (std::size_t t = 0; t < 7; ++t) {
        CHECK(observations[t].pue[0] == want_pue[t % 3]);
        CHECK(observations[t].price_weight[0] == want_price[t % 2]);
    }
    CHECK(observations[4].pue[1] == 1.4);
}

TEST_CASE("every observation from the reference scenario validates") {
    const auto scenario = fixtures::reference_scenario();
    const auto observations =
        gda::generate_observations(scenario.generator, scenario.system, scenario.horizon);
    REQUIRE(observations.size() == 288);
    for (const auto& obs : observations)
        CHECK(gda::validate_observation(obs, scenario.system).ok());
}

TEST_CASE("dataset_proportional ratios copy the distribution into every row") {
    auto config = helpers::make_config(3, 2);
    config.dataset_distribution[0] = {0.5, 0.3, 0.2};
    config.dataset_distribution[1] = {0.1, 0.1, 0.8};
    auto spec = make_spec(config);
    spec.ratio = gda::RatioSpec{gda::RatioKind::dataset_proportional, ""};
    const auto tensors = gda::generate_ratios(spec, config);
    REQUIRE(tensors.size() == 2);
    for (std::size_t type = 0; type < 2; ++type)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(tensors[type](i, j) == config.dataset_distribution[type][j]);
}

TEST_CASE("dirichlet ratios are row-stochastic, positive, and seed-stable") {
    const auto config = helpers::make_config(4, 2);
    auto spec = make_spec(config, 2024);
    spec.ratio = gda::RatioSpec{gda::RatioKind::dirichlet_random, ""};
    const auto tensors = gda::generate_ratios(spec, config);
    REQUIRE(tensors.size() == 2);
    for (const auto& tensor : tensors) {
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(tensor.row_sum(i) == doctest::Approx(1.0).epsilon(1e-9));
            for (std::size_t j = 0; j < 4; ++j) CHECK(tensor(i, j) > 0.0);
        }
    }
    CHECK(gda::generate_ratios(spec, config) == tensors);
    spec.seed = 2025;
    CHECK(gda::generate_ratios(spec, config) != tensors);
}

TEST_CASE("file ratios load, and malformed files are rejected") {
    const auto config = helpers::make_config(2, 1);
    auto spec = make_spec(config);

    const auto good = temp_dir() / "ratio_ok.json";
    {
        std::ofstream out(good);
        out << "[[[0.25, 0.75], [0.5, 0.5]]]";
    }
    spec.ratio = gda::RatioSpec{gda::RatioKind::file, good.string()};
    const auto tensors = gda::generate_ratios(spec, config);
    REQUIRE(tensors.size() == 1);
    CHECK(tensors[0](0, 1) == 0.75);

    const auto junk = temp_dir() / "ratio_junk.json";
    {
        std::ofstream out(junk);
        out << "not json at all";
    }
    spec.ratio->path = junk.string();
    CHECK_THROWS_AS((void)gda::generate_ratios(spec, config), gda::GeneratorError);

    const auto short_doc = temp_dir() / "ratio_short.json";
    {
        std::ofstream out(short_doc);
        out << "[]";
    }
    spec.ratio->path = short_doc.string();
    CHECK_THROWS_AS((void)gda::generate_ratios(spec, config), gda::GeneratorError);

    spec.ratio->path = (temp_dir() / "ratio_missing.json").string();
    CHECK_THROWS_AS((void)gda::generate_ratios(spec, config), gda::GeneratorError);

    spec.ratio.reset();
    CHECK_THROWS_AS((void)gda::generate_ratios(spec, config), gda::GeneratorError);
}

TEST_CASE("validate_generator flags each malformed field") {
    const auto config = helpers::make_config(2, 1);

    auto spec = make_spec(config);
    spec.arrival.rate_per_slot = {-1.0};
    CHECK(has_violation(gda::validate_generator(spec, config), gda::ViolationKind::range,
                        "arrival.rate_per_slot[0]"));

    spec = make_spec(config);
    spec.service.lo(0, 0) = 9.0;  // above hi
    CHECK(has_violation(gda::validate_generator(spec, config), gda::ViolationKind::range,
                        "service.lo[0][0]"));

    spec = make_spec(config);
    spec.service.hi(1, 0) = 101.0;  // above service_bound
    CHECK(has_violation(gda::validate_generator(spec, config), gda::ViolationKind::range,
                        "service.hi[1][0]"));

    spec = make_spec(config);
    spec.pue.kind = gda::PueKind::sinusoidal_diurnal;
    spec.pue.base = {1.2, 1.2};
    spec.pue.amplitude = {0.5, 0.1};  // 1.2 - 0.5 dips below 1
    spec.pue.phase_slots = {0.0, 0.0};
    spec.pue.period_slots = 0;
    const auto sinus = gda::validate_generator(spec, config);
    CHECK(has_violation(sinus, gda::ViolationKind::range, "pue.base[0]"));
    CHECK(has_violation(sinus, gda::ViolationKind::range, "pue.period_slots"));

    spec = make_spec(config);
    spec.price.kind = gda::PriceKind::step_schedule;
    spec.price.levels = {{5.0, -2.0}, {1.0}};
    spec.price.slots_per_step = 0;
    const auto steps = gda::validate_generator(spec, config);
    CHECK(has_violation(steps, gda::ViolationKind::range, "price.levels[0][1]"));
    CHECK(has_violation(steps, gda::ViolationKind::range, "price.slots_per_step"));

    spec = make_spec(config);
    spec.pue.kind = gda::PueKind::file;
    spec.pue.path.clear();
    CHECK(has_violation(gda::validate_generator(spec, config), gda::ViolationKind::shape,
                        "pue.path"));

    spec = make_spec(config);
    spec.price.kind = gda::PriceKind::file;
    spec.price.path.clear();
    CHECK(has_violation(gda::validate_generator(spec, config), gda::ViolationKind::shape,
                        "price.path"));

    spec = make_spec(config);
    spec.ratio = gda::RatioSpec{gda::RatioKind::file, ""};
    CHECK(has_violation(gda::validate_generator(spec, config), gda::ViolationKind::shape,
                        "ratio.path"));
}

TEST_CASE("a bad spec or horizon aborts generation") {
    const auto config = helpers::make_config(2, 1);
    auto spec = make_spec(config);
    CHECK_THROWS_AS((void)gda::generate_observations(spec, config, 0), gda::GeneratorError);
    spec.arrival.rate_per_slot = {-3.0};
    CHECK_THROWS_AS((void)gda::generate_observations(spec, config, 10), gda::GeneratorError);
}

TEST_SUITE_END();
