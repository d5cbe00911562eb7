#pragma once

#include <optional>

#include "shockprof/mat2.hpp"

namespace shockprof {

// A point of the pure radiation fluid, p(theta) = theta^4 / 3, with the shock
// normal fixed along x^1. Canonical coordinates are (theta, v); the Godunov
// pair psi^gamma = u^gamma / theta is a derived view.
class FluidState {
public:
    // Throws InvalidInput unless theta > 0 and both values are finite.
    static FluidState from_theta_v(double theta, double v);

    // Throws InvalidInput unless psi0 > |psi1|.
    static FluidState from_psi(double psi0, double psi1);
    static FluidState from_psi(const Vec2& psi) { return from_psi(psi.x, psi.y); }

    double theta() const { return theta_; }
    double v() const { return v_; }
    double u() const { return u_; }

    // Contravariant pair (psi^0, psi^1).
    Vec2 psi() const { return {u_ / theta_, v_ / theta_}; }
    // Covariant pair (psi_0, psi_1) = (-psi^0, psi^1).
    Vec2 psi_cov() const { return {-u_ / theta_, v_ / theta_}; }

private:
    FluidState(double theta, double v, double u) : theta_(theta), v_(v), u_(u) {}

    double theta_;
    double v_;
    double u_;
};

// Integration constants q^alpha = T^{alpha 1}(psi_+-) of a standing shock.
struct FluxTarget {
    double q0 = 0.0;
    double q1 = 0.0;

    // Normalised right-moving family: q1 = 1, q0 = q_tilde^{-1/2}.
    static FluxTarget from_q_tilde(double q_tilde);

    // (q1 / q0)^2; empty when q0 == 0.
    std::optional<double> q_tilde() const;
};

// The two xi-components (T^{01}, T^{11}) of the ideal stress.
struct FluxPair {
    double t01 = 0.0;
    double t11 = 0.0;
};

FluxPair flux(const FluidState& s);

// A(psi) = [[v(6u^2-1), -u(6v^2+1)], [-u(6v^2+1), v(6v^2+3)]], acting on the
// contravariant pair. The Jacobian of profile_rhs with respect to
// (psi^0, psi^1) is (4/3) theta^5 A.
Mat2 flux_jacobian(const FluidState& s);

// F = (q0 - T^{01}, T^{11} - q1); vanishes exactly at Rankine-Hugoniot states.
Vec2 profile_rhs(const FluidState& s, const FluxTarget& q);

}  // namespace shockprof
