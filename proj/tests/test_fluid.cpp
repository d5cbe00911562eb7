#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "shockprof/errors.hpp"
#include "shockprof/fluid.hpp"

using namespace shockprof;

TEST_CASE("psi round trip through (theta, v)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> theta(0.05, 20.0), v(-30.0, 30.0);
    for (int i = 0; i < 500; ++i) {
        const auto s = FluidState::from_theta_v(theta(rng), v(rng));
        const auto back = FluidState::from_psi(s.psi());
        CHECK(back.theta() == doctest::Approx(s.theta()).epsilon(1e-12));
        CHECK(back.v() == doctest::Approx(s.v()).epsilon(1e-12));
        CHECK(s.psi_cov().x == -s.psi().x);
        CHECK(s.psi_cov().y == s.psi().y);
    }
}

TEST_CASE("states outside the domain are rejected") {
    CHECK_THROWS_AS(FluidState::from_psi(1.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(FluidState::from_psi(0.5, -0.7), InvalidInput);
    CHECK_THROWS_AS(FluidState::from_theta_v(0.0, 0.3), InvalidInput);
    CHECK_THROWS_AS(FluidState::from_theta_v(1.0, NAN), InvalidInput);
}

TEST_CASE("flux matches the ideal stress of the radiation fluid") {
    const auto s = FluidState::from_theta_v(1.3, 0.4);
    const double t4 = std::pow(1.3, 4);
    const double u = std::sqrt(1.16);
    const FluxPair f = flux(s);
    CHECK(f.t01 == doctest::Approx(4.0 / 3.0 * t4 * u * 0.4));
    CHECK(f.t11 == doctest::Approx(t4 * (4.0 / 3.0 * 0.16 + 1.0 / 3.0)));
}

TEST_CASE("profile_rhs Jacobian equals (4/3) theta^5 A") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> theta(0.3, 3.0), v(-3.0, 3.0);
    const FluxTarget q{1.1, 0.9};
    for (int i = 0; i < 200; ++i) {
        const auto s = FluidState::from_theta_v(theta(rng), v(rng));
        const Mat2 fd = oracle::fd_jacobian(
            [&](const Vec2& p) { return profile_rhs(FluidState::from_psi(p), q); }, s.psi(), 1e-6);
        const Mat2 expect = flux_jacobian(s) * (4.0 / 3.0 * std::pow(s.theta(), 5));
        CHECK((fd - expect).frobenius() <= 1e-6 * (1.0 + expect.frobenius()));
    }
}

TEST_CASE("det A = 2 v^2 - 1 and A is symmetric") {
    for (double v : {-2.0, -0.7, 0.0, 0.3, 1.0 / std::sqrt(2.0), 5.0}) {
        const Mat2 a = flux_jacobian(FluidState::from_theta_v(1.0, v));
        CHECK(a.det() == doctest::Approx(2.0 * v * v - 1.0).epsilon(1e-12));
        CHECK(a.is_symmetric());
    }
}

TEST_CASE("q_tilde normalisation") {
    const auto q = FluxTarget::from_q_tilde(0.81);
    CHECK(q.q0 == doctest::Approx(1.0 / 0.9));
    CHECK(q.q1 == 1.0);
    CHECK(*q.q_tilde() == doctest::Approx(0.81));
    CHECK_FALSE(FluxTarget{0.0, 1.0}.q_tilde().has_value());
    CHECK_THROWS_AS(FluxTarget::from_q_tilde(-1.0), InvalidInput);
}
