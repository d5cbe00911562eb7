#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "shockprof/errors.hpp"
#include "shockprof/report_io.hpp"
#include "shockprof/sweep.hpp"

using namespace shockprof;

namespace {
const DissipationParams kDefaults(1.0, 7.0, 20.0);
}

TEST_CASE("format_double round trips exactly") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double x = d(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(parse_double(format_double(x)) == x);
    }
    CHECK(std::isnan(parse_double(format_double(std::numeric_limits<double>::quiet_NaN()))));
    CHECK_THROWS_AS(parse_double("1.5x"), InvalidInput);
    CHECK_THROWS_AS(parse_double(""), InvalidInput);
}

TEST_CASE("sweep rows in input order and CSV round trip") {
    const std::vector<double> grid{0.76, 0.79, 0.82, 0.9};
    const auto rows = sweep_q(kDefaults, grid);
    REQUIRE(rows.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(rows[i].q_tilde == grid[i]);
    CHECK(rows[0].verdict == "exists");
    CHECK(rows[3].verdict == "not-exists-attractor");
    std::stringstream ss;
    write_sweep_csv(ss, rows);
    CHECK(ss.str().rfind(kSweepHeader, 0) == 0);
    const auto back = read_sweep_csv(ss);
    CHECK(back == rows);
}

TEST_CASE("sweep records failures instead of aborting") {
    const auto rows = sweep_q(kDefaults, {0.7, 0.8});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].verdict == "inconclusive");
    CHECK(std::isnan(rows[0].v_minus));
    CHECK(rows[1].verdict == "exists");
}

TEST_CASE("parallel sweep equals serial sweep") {
    std::vector<double> grid;
    for (int i = 0; i < 12; ++i) grid.push_back(0.76 + 0.02 * i);
    const auto a = sweep_q(kDefaults, grid, {}, 1);
    const auto b = sweep_q(kDefaults, grid, {}, 4);
    CHECK(a == b);
}

TEST_CASE("critical amplitude is the sign change of det B at psi_-") {
    const auto q = critical_q(kDefaults, 1e-10);
    REQUIRE(q.has_value());
    // On the Hugoniot curve q_tilde = (4x + 1)^2 / (16 x (x + 1)) with x = v^2;
    // the sign change sits at the positive root x of the det B quartic in v.
    const auto c = det_b_coefficients(kDefaults);
    const double x = (-c.c2 + std::sqrt(c.c2 * c.c2 - 4.0 * c.c4 * c.c0)) / (2.0 * c.c4);
    const double expect = (4.0 * x + 1.0) * (4.0 * x + 1.0) / (16.0 * x * (x + 1.0));
    CHECK(*q == doctest::Approx(expect).epsilon(1e-9));
    const double below = det_b_closed_form(std::pow(shock_states(*q - 1e-6).psi_minus.v(), 2), kDefaults);
    const double above = det_b_closed_form(std::pow(shock_states(*q + 1e-6).psi_minus.v(), 2), kDefaults);
    CHECK(below < 0.0);
    CHECK(above > 0.0);
    CHECK_FALSE(critical_q(DissipationParams(1.0, 7.0, 3.15)).has_value());
}

TEST_CASE("region map layout") {
    const auto cells = region_map(1.0, {2.0, 7.0}, {1.0, 3.15, 20.0});
    REQUIRE(cells.size() == 6);
    CHECK(cells[1 * 3 + 2].mu == 7.0);
    CHECK(cells[1 * 3 + 2].nu == 20.0);
    CHECK(cells[1 * 3 + 2].causality == CausalityClass::strictly_causal);
    CHECK(cells[1 * 3 + 2].has_critical_q);
    CHECK(cells[1 * 3 + 1].causality == CausalityClass::sharply_causal);
    CHECK(cells[1 * 3 + 0].causality == CausalityClass::acausal_superluminal);
    std::stringstream ss;
    write_region_csv(ss, cells);
    CHECK(ss.str().rfind(kRegionHeader, 0) == 0);
}

TEST_CASE("portrait bundle contents") {
    PortraitSpec spec;
    spec.nx = 8;
    spec.ny = 6;
    spec.seeds = {{1.2, 0.8}};
    const auto b = portrait_data(kDefaults, 0.775, spec);
    CHECK(b.rest_points.size() == 2);
    CHECK(b.singular_lines.size() >= 2);
    CHECK_FALSE(b.field.empty());
    CHECK(b.field.size() <= 48);
    int connecting = 0;
    for (const auto& o : b.orbits) connecting += o.connecting ? 1 : 0;
    CHECK(connecting == 1);
    for (const auto& a : b.field) CHECK(a.direction.norm() == doctest::Approx(1.0));

    std::stringstream csv, svg;
    write_portrait_csv(csv, b);
    write_portrait_svg(svg, b);
    CHECK(csv.str().rfind(kPortraitHeader, 0) == 0);
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(svg.str().find("</svg>") != std::string::npos);

    spec.coords = PlotCoords::v_theta;
    const auto vt = portrait_data(kDefaults, 0.775, spec);
    CHECK(vt.rest_points[0].position.x == doctest::Approx(shock_states(0.775).psi_minus.v()));
}

TEST_CASE("portrait spec validation") {
    PortraitSpec spec;
    spec.nx = 0;
    CHECK_THROWS_AS(portrait_data(kDefaults, 0.8, spec), InvalidInput);
    spec = {};
    spec.window = Window{1.0, 0.5, 0.0, 1.0};
    CHECK_THROWS_AS(portrait_data(kDefaults, 0.8, spec), InvalidInput);
}
