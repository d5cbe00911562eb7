#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string_view>

#include "shockprof/dissipation.hpp"

namespace shockprof {

enum class CausalityClass {
    acausal_nonreal,       // some sigma^2 < 0: imaginary characteristic speed
    acausal_superluminal,  // max sigma^2 > 1
    strictly_causal,       // 0 <= sigma^2 < 1
    sharply_causal,        // max sigma^2 == 1
};

std::string_view to_string(CausalityClass c);

// pi(s) = 9 mu nu s^2 - 3 mu (3 eta_tilde + 2 nu) s - nu (eta_tilde - mu),
// whose roots are the squared characteristic speeds of the dissipation
// operator, evaluated in the fluid rest frame.
double dispersion_polynomial(double sigma_squared, const DissipationParams& p);

struct DispersionRoots {
    // Ascending when real. Always real for positive coefficients.
    std::array<std::complex<double>, 2> sigma_squared;
    // eta_tilde (81 mu^2 eta_tilde + 36 mu nu (3 mu + nu)), equal to b^2 - 4ac.
    double discriminant = 0.0;
    bool real = true;
};

DispersionRoots dispersion_roots(const DissipationParams& p);

// 4 mu nu - (9 mu + nu) eta_tilde.
double pi_at_one(const DissipationParams& p);

struct CausalityReport {
    std::array<std::complex<double>, 2> sigma_squared;
    CausalityClass classification = CausalityClass::strictly_causal;
    double pi_at_one = 0.0;
    double discriminant = 0.0;
    std::optional<double> nu_star;

    // The closed-form condition mu >= (4/3) eta and nu <= nu_star, evaluated
    // literally. Reported next to the root-based class, which is authoritative.
    bool inequality_general = false;
    bool inequality_strict = false;
    bool inequality_sharp = false;
    // True when root-based causality and the literal inequality disagree.
    bool inequality_disagrees = false;

    double sigma2_max() const { return sigma_squared[1].real(); }
    double sigma2_min() const { return sigma_squared[0].real(); }
};

inline constexpr double kLuminalTol = 1e-9;

CausalityReport classify_causality(const DissipationParams& p, double tol = kLuminalTol);

}  // namespace shockprof
