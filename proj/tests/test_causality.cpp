#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "shockprof/causality.hpp"
#include "shockprof/dissipation.hpp"

using namespace shockprof;

TEST_CASE("dispersion roots match the textbook quadratic") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> coef(0.05, 40.0);
    for (int i = 0; i < 500; ++i) {
        const double eta = coef(rng), mu = coef(rng), nu = coef(rng);
        const DissipationParams p(eta, mu, nu);
        const auto roots = dispersion_roots(p);
        const auto [lo, hi] = oracle::sigma_squared(eta, mu, nu);
        REQUIRE(roots.real);
        CHECK(roots.sigma_squared[0].real() == doctest::Approx(lo).epsilon(1e-10).scale(1.0));
        CHECK(roots.sigma_squared[1].real() == doctest::Approx(hi).epsilon(1e-10).scale(1.0));
        CHECK(dispersion_polynomial(hi, p) == doctest::Approx(0.0).scale(9.0 * mu * nu * hi * hi + 1.0));
    }
}

TEST_CASE("pi(1) equals 4 mu nu - (9 mu + nu) eta_tilde") {
    const DissipationParams p(1.0, 7.0, 20.0);
    CHECK(pi_at_one(p) == doctest::Approx(dispersion_polynomial(1.0, p)));
    CHECK(pi_at_one(p) == doctest::Approx(4.0 * 7 * 20 - (63.0 + 20) * 4.0 / 3.0));
    CHECK(pi_at_one(p) == doctest::Approx(det_b_coefficients(p).c4));
}

TEST_CASE("classification by roots") {
    CHECK(classify_causality(DissipationParams(1.0, 7.0, 20.0)).classification == CausalityClass::strictly_causal);
    CHECK(classify_causality(DissipationParams(1.0, 7.0, 3.15)).classification == CausalityClass::sharply_causal);
    CHECK(classify_causality(DissipationParams(1.0, 7.0, 1.0)).classification ==
          CausalityClass::acausal_superluminal);
    // mu < eta_tilde makes nu (mu - eta_tilde) negative, so a root is negative.
    CHECK(classify_causality(DissipationParams(1.0, 1.0, 20.0)).classification == CausalityClass::acausal_nonreal);
}

TEST_CASE("printed inequality is evaluated and disagreement flagged") {
    const auto strict = classify_causality(DissipationParams(1.0, 7.0, 20.0));
    CHECK_FALSE(strict.inequality_general);
    CHECK(strict.inequality_disagrees);
    const auto sup = classify_causality(DissipationParams(1.0, 7.0, 1.0));
    CHECK(sup.inequality_general);
    CHECK(sup.inequality_disagrees);
    const auto sharp = classify_causality(DissipationParams(1.0, 7.0, 3.15));
    CHECK(sharp.inequality_sharp);
    CHECK_FALSE(sharp.inequality_disagrees);
}

TEST_CASE("max sigma^2 crosses one at the threshold") {
    for (double mu : {2.0, 5.0, 11.0}) {
        const DissipationParams base(1.0, mu, 1.0);
        const double ns = *base.nu_star();
        CHECK(classify_causality(base.with_nu(ns)).sigma2_max() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(classify_causality(base.with_nu(ns * 1.01)).sigma2_max() < 1.0);
        CHECK(classify_causality(base.with_nu(ns * 0.99)).sigma2_max() > 1.0);
    }
}

TEST_CASE("class names") {
    CHECK(to_string(CausalityClass::strictly_causal) == "strictly-causal");
    CHECK(to_string(CausalityClass::acausal_superluminal) == "acausal-superluminal");
}
