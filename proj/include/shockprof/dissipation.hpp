#pragma once

#include <optional>
#include <vector>

#include "shockprof/fluid.hpp"

namespace shockprof {

// Viscosity eta and the two regulator coefficients mu (thermal) and nu (velocity).
class DissipationParams {
public:
    // Throws InvalidInput unless all three are finite and positive.
    DissipationParams(double eta, double mu, double nu);

    double eta() const { return eta_; }
    double mu() const { return mu_; }
    double nu() const { return nu_; }
    double eta_tilde() const { return (4.0 / 3.0) * eta_; }

    // Luminal threshold (1/(3 eta) - 1/(9 mu))^{-1}; defined only for 3 mu > eta.
    std::optional<double> nu_star() const;
    // Same threshold written as 9 eta mu / (3 mu - eta).
    std::optional<double> nu_star_product_form() const;
    // Root in nu of c4(eta_tilde, mu, nu) = 0: 9 eta_tilde mu / (4 mu - eta_tilde).
    std::optional<double> nu_star_from_c4() const;

    DissipationParams with_nu(double nu) const { return {eta_, mu_, nu}; }

private:
    double eta_;
    double mu_;
    double nu_;
};

// xi-xi contractions of the three dissipation tensors, in (u, v) form.
struct BComponents {
    Mat2 visc;  // B~_visc, multiplies eta_tilde
    Mat2 ther;
    Mat2 velo;
};

BComponents b_components(const FluidState& s);

// B = eta_tilde B~_visc - mu B_ther - nu B_velo.
Mat2 b_total(const FluidState& s, const DissipationParams& p);

// det B(psi) = c4 v^4 + c2 v^2 + c0; no dependence on theta.
struct DetBCoefficients {
    double c4 = 0.0;
    double c2 = 0.0;
    double c0 = 0.0;
};

DetBCoefficients det_b_coefficients(const DissipationParams& p);

double det_b_closed_form(double v_squared, const DissipationParams& p);

// Nonnegative speeds v with det B = 0, ascending (0, 1 or 2 values). The
// singular locus in the psi-plane is the pair of rays v = +-speed.
std::vector<double> singular_speeds(const DissipationParams& p);

}  // namespace shockprof
