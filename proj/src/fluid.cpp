#include "shockprof/fluid.hpp"

#include <cmath>
#include <string>

#include "shockprof/errors.hpp"

namespace shockprof {

FluidState FluidState::from_theta_v(double theta, double v) {
    if (!std::isfinite(theta) || !(theta > 0.0)) {
        throw InvalidInput("temperature must be finite and positive, got " + std::to_string(theta));
    }
    if (!std::isfinite(v)) {
        throw InvalidInput("velocity must be finite");
    }
    return FluidState(theta, v, std::sqrt(1.0 + v * v));
}

FluidState FluidState::from_psi(double psi0, double psi1) {
    if (!std::isfinite(psi0) || !std::isfinite(psi1) || !(psi0 > std::abs(psi1))) {
        throw InvalidInput("psi must satisfy psi0 > |psi1|");
    }
    // (psi0 - psi1)(psi0 + psi1) keeps precision when psi is close to the light cone.
    const double theta = 1.0 / std::sqrt((psi0 - psi1) * (psi0 + psi1));
    return from_theta_v(theta, theta * psi1);
}

FluxTarget FluxTarget::from_q_tilde(double q_tilde) {
    if (!std::isfinite(q_tilde) || !(q_tilde > 0.0)) {
        throw InvalidInput("q_tilde must be positive");
    }
    return {1.0 / std::sqrt(q_tilde), 1.0};
}

std::optional<double> FluxTarget::q_tilde() const {
    if (q0 == 0.0) return std::nullopt;
    const double r = q1 / q0;
    return r * r;
}

FluxPair flux(const FluidState& s) {
    const double t2 = s.theta() * s.theta();
    const double t4 = t2 * t2;
    const double v = s.v();
    return {(4.0 / 3.0) * t4 * s.u() * v, t4 * ((4.0 / 3.0) * v * v + 1.0 / 3.0)};
}

Mat2 flux_jacobian(const FluidState& s) {
    const double u = s.u();
    const double v = s.v();
    const double v2 = v * v;
    const double off = -u * (6.0 * v2 + 1.0);
    return {v * (6.0 * u * u - 1.0), off, off, v * (6.0 * v2 + 3.0)};
}

Vec2 profile_rhs(const FluidState& s, const FluxTarget& q) {
    const FluxPair t = flux(s);
    return {q.q0 - t.t01, t.t11 - q.q1};
}

}  // namespace shockprof
