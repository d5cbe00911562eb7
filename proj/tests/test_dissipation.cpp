#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "shockprof/dissipation.hpp"
#include "shockprof/errors.hpp"

using namespace shockprof;

TEST_CASE("parameters must be positive") {
    CHECK_THROWS_AS(DissipationParams(0.0, 1.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(DissipationParams(1.0, -1.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(DissipationParams(1.0, 1.0, INFINITY), InvalidInput);
    CHECK_NOTHROW(DissipationParams(1.0, 7.0, 20.0));
}

TEST_CASE("luminal threshold forms agree") {
    const DissipationParams p(1.0, 7.0, 20.0);
    CHECK(*p.nu_star() == doctest::Approx(3.15).epsilon(1e-14));
    CHECK(*p.nu_star_product_form() == doctest::Approx(3.15).epsilon(1e-14));
    CHECK(*p.nu_star_from_c4() == doctest::Approx(3.15).epsilon(1e-14));
    CHECK(*DissipationParams(1.0, 2.0, 1.0).nu_star() == doctest::Approx(3.6));
    CHECK_FALSE(DissipationParams(3.0, 1.0, 1.0).nu_star().has_value());
    const auto c = det_b_coefficients(p.with_nu(3.15));
    CHECK(std::abs(c.c4) < 1e-12);
}

TEST_CASE("each dissipation component is rank one") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> v(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const auto s = FluidState::from_theta_v(1.0, v(rng));
        const BComponents b = b_components(s);
        for (const Mat2& m : {b.visc, b.ther, b.velo}) {
            CHECK(std::abs(m.det()) <= 1e-12 * m.frobenius() * m.frobenius());
            CHECK(m.is_symmetric());
        }
    }
}

TEST_CASE("det B equals the closed-form quartic in v") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coef(0.05, 30.0), v(-5.0, 5.0), theta(0.1, 10.0);
    for (int i = 0; i < 500; ++i) {
        const DissipationParams p(coef(rng), coef(rng), coef(rng));
        const auto s = FluidState::from_theta_v(theta(rng), v(rng));
        const Mat2 b = b_total(s, p);
        const double scale = std::abs(b.a00 * b.a11) + std::abs(b.a01 * b.a10);
        CHECK(std::abs(b.det() - det_b_closed_form(s.v() * s.v(), p)) <= 1e-12 * scale);
    }
}

TEST_CASE("trace of B is negative when mu >= eta_tilde") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> coef(0.1, 10.0), v(-5.0, 5.0);
    for (int i = 0; i < 300; ++i) {
        const double eta = coef(rng);
        const DissipationParams p(eta, 4.0 / 3.0 * eta + coef(rng), coef(rng));
        CHECK(b_total(FluidState::from_theta_v(1.0, v(rng)), p).trace() < 0.0);
    }
}

TEST_CASE("singular speeds match a sign scan of det B") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> coef(0.2, 25.0);
    for (int i = 0; i < 100; ++i) {
        const DissipationParams p(coef(rng), coef(rng), coef(rng));
        const auto speeds = singular_speeds(p);
        const auto zeros = oracle::scan_zeros([&](double v) { return det_b_closed_form(v * v, p); }, 50.0, 20000);
        REQUIRE(speeds.size() == zeros.size());
        for (std::size_t k = 0; k < zeros.size(); ++k) {
            CHECK(speeds[k] == doctest::Approx(zeros[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("sharp tuning leaves one singular speed") {
    const auto speeds = singular_speeds(DissipationParams(1.0, 7.0, 3.15));
    REQUIRE(speeds.size() == 1);
    CHECK(det_b_closed_form(speeds[0] * speeds[0], DissipationParams(1.0, 7.0, 3.15)) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("default parameters have singular lines at v ~ 0.4295 and 1.1694") {
    const auto speeds = singular_speeds(DissipationParams(1.0, 7.0, 20.0));
    REQUIRE(speeds.size() == 2);
    CHECK(speeds[0] == doctest::Approx(0.429470577642516).epsilon(1e-12));
    CHECK(speeds[1] == doctest::Approx(1.1693946324155045).epsilon(1e-12));
}
