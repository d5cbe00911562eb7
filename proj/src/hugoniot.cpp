#include "shockprof/hugoniot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shockprof/errors.hpp"

namespace shockprof {

namespace {

// Positive roots x = v^2 of 16(1-q)x^2 + 8(1-2q)x + 1 = 0, ascending.
std::vector<double> velocity_squares(double q_tilde) {
    const double excess = 4.0 * q_tilde - 3.0;
    if (excess < -kQTildeEndpointTol) return {};
    if (std::abs(excess) <= kQTildeEndpointTol) {
        // Tangency of the two curves: the double root v^2 = 1/2.
        return {0.5};
    }
    const double r = std::sqrt(q_tilde * excess);
    const double upper = 2.0 * q_tilde - 1.0 + r;
    // Smaller root from the root product 1 / (16(1-q)); finite for every q > 3/4.
    std::vector<double> roots{1.0 / (4.0 * upper)};
    if (q_tilde < 1.0 - kQTildeEndpointTol) {
        roots.push_back(upper / (4.0 * (1.0 - q_tilde)));
    }
    return roots;
}

}  // namespace

double theta_on_momentum_curve(double v, double q1) {
    return std::pow(((4.0 / 3.0) * v * v + 1.0 / 3.0) / q1, -0.25);
}

ShockPair shock_states(double q_tilde) {
    if (!std::isfinite(q_tilde) || q_tilde <= 0.75 + kQTildeEndpointTol ||
        q_tilde >= 1.0 - kQTildeEndpointTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "q_tilde = " << q_tilde
            << " is outside the admissible interval (3/4, 1): 3/4 is the zero-amplitude"
               " limit and 1 the infinite-amplitude limit";
        throw NoShockError(msg.str());
    }
    const auto x = velocity_squares(q_tilde);
    const double v_plus = std::sqrt(x.at(0));
    const double v_minus = std::sqrt(x.at(1));
    return ShockPair{
        FluidState::from_theta_v(theta_on_momentum_curve(v_minus, 1.0), v_minus),
        FluidState::from_theta_v(theta_on_momentum_curve(v_plus, 1.0), v_plus),
        FluxTarget::from_q_tilde(q_tilde),
    };
}

std::vector<FluidState> solve_T_eq_q(double q0, double q1) {
    if (!std::isfinite(q0) || !std::isfinite(q1)) {
        throw InvalidInput("flux target must be finite");
    }
    if (q1 <= 0.0) return {};
    if (q0 == 0.0) {
        // Static radiation: v = 0 and theta^4 / 3 = q1.
        return {FluidState::from_theta_v(std::pow(3.0 * q1, 0.25), 0.0)};
    }
    // q_tilde is invariant under (psi, q) -> (a psi, a^{-4} q); the reflection
    // q0 -> -q0 maps v -> -v.
    const double ratio = q1 / q0;
    const double sign = q0 > 0.0 ? 1.0 : -1.0;
    std::vector<FluidState> out;
    for (double x : velocity_squares(ratio * ratio)) {
        const double v = sign * std::sqrt(x);
        out.push_back(FluidState::from_theta_v(theta_on_momentum_curve(v, q1), v));
    }
    std::sort(out.begin(), out.end(),
              [](const FluidState& a, const FluidState& b) { return a.v() < b.v(); });
    return out;
}

namespace {

std::array<int, 2> char_signs(const FluidState& s) {
    const auto ev = flux_jacobian(s).eigenvalues();
    std::array<int, 2> signs{};
    const double lams[2] = {ev.first.real(), ev.second.real()};
    for (int i = 0; i < 2; ++i) {
        if (std::abs(lams[i]) < 1e-10) {
            throw DegenerateClassification("characteristic speed vanishes at v = " +
                                           std::to_string(s.v()));
        }
        signs[i] = lams[i] > 0.0 ? 1 : -1;
    }
    return signs;
}

}  // namespace

LaxReport lax_classify(const ShockPair& pair) {
    LaxReport rep;
    rep.upstream_char_signs = char_signs(pair.psi_minus);
    rep.downstream_char_signs = char_signs(pair.psi_plus);
    const bool up_pp = rep.upstream_char_signs[0] > 0 && rep.upstream_char_signs[1] > 0;
    const bool down_mp = rep.downstream_char_signs[0] < 0 && rep.downstream_char_signs[1] > 0;
    rep.is_1_shock = up_pp && down_mp;
    return rep;
}

}  // namespace shockprof
