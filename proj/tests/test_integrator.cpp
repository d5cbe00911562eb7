#include <doctest.h>

#include <cmath>

#include "shockprof/integrator.hpp"

using namespace shockprof;

TEST_CASE("harmonic oscillator over one period") {
    DormandPrince54 rk([](const Vec2& x) { return Vec2{x.y, -x.x}; }, {1.0, 0.0}, {1e-11, 1e-13, 1e-2});
    const double period = 2.0 * M_PI;
    while (rk.time() < period) {
        REQUIRE(rk.step() == StepStatus::accepted);
    }
    // Interpolate back to the exact period inside the last step.
    const double s = (period - rk.previous_time()) / (rk.time() - rk.previous_time());
    const Vec2 x = rk.interpolate(s);
    CHECK(x.x == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(x.y) < 1e-6);
}

TEST_CASE("exponential decay matches the exact solution") {
    DormandPrince54 rk([](const Vec2& x) { return Vec2{-x.x, -2.0 * x.y}; }, {1.0, 1.0}, {1e-10, 1e-14, 1e-2});
    while (rk.time() < 3.0) REQUIRE(rk.step() == StepStatus::accepted);
    CHECK(rk.state().x == doctest::Approx(std::exp(-rk.time())).epsilon(1e-8));
    CHECK(rk.state().y == doctest::Approx(std::exp(-2.0 * rk.time())).epsilon(1e-8));
}

TEST_CASE("inadmissible region blocks the stepper") {
    DormandPrince54 rk([](const Vec2&) { return Vec2{1.0, 0.0}; }, {0.0, 0.0}, {});
    const Admissible wall = [](const Vec2& x) { return x.x < 0.5; };
    StepStatus st = StepStatus::accepted;
    for (int i = 0; i < 100000 && st == StepStatus::accepted; ++i) st = rk.step(wall);
    CHECK(st == StepStatus::blocked);
    CHECK(rk.state().x < 0.5);
    CHECK(rk.state().x > 0.5 - 1e-6);
}

TEST_CASE("non-finite field values shrink the step") {
    DormandPrince54 rk([](const Vec2& x) { return x.x > 1.0 ? Vec2{NAN, NAN} : Vec2{1.0, 0.0}; }, {0.0, 0.0}, {});
    StepStatus st = StepStatus::accepted;
    for (int i = 0; i < 100000 && st == StepStatus::accepted; ++i) st = rk.step();
    CHECK(st != StepStatus::accepted);
    CHECK(rk.state().x <= 1.0);
}

TEST_CASE("displacement cap bounds each step") {
    DormandPrince54 rk([](const Vec2&) { return Vec2{1.0, 1.0}; }, {0.0, 0.0}, {1e-6, 1e-9, 1e-3});
    for (int i = 0; i < 50; ++i) {
        const Vec2 before = rk.state();
        REQUIRE(rk.step() == StepStatus::accepted);
        CHECK((rk.state() - before).norm() <= 1e-3 * (1.0 + before.norm()) * 1.0000001);
    }
}
