#pragma once

#include <array>
#include <vector>

#include "shockprof/fluid.hpp"

namespace shockprof {

// Distance from the endpoints of (3/4, 1) below which q_tilde is treated as
// the zero-amplitude or infinite-amplitude limit.
inline constexpr double kQTildeEndpointTol = 1e-12;

// A standing Lax shock in right-moving decelerating flow.
struct ShockPair {
    FluidState psi_minus;  // upstream, v = v_-
    FluidState psi_plus;   // downstream, v = v_+
    FluxTarget q;

    double amplitude() const { return psi_minus.v() - psi_plus.v(); }
};

// Temperature on the curve T^{11} = q1: theta^1(v, q1).
double theta_on_momentum_curve(double v, double q1);

// Shock states of the normalised family q = (q_tilde^{-1/2}, 1).
// Throws NoShockError unless 3/4 < q_tilde < 1 (with kQTildeEndpointTol).
ShockPair shock_states(double q_tilde);

// All states in Psi with T^{alpha 1}(psi) = q^alpha, ordered by ascending v.
// Returns 0, 1 or 2 states; empty when q1 <= 0. Throws InvalidInput on
// non-finite input.
std::vector<FluidState> solve_T_eq_q(double q0, double q1);

struct LaxReport {
    std::array<int, 2> upstream_char_signs{};    // ascending eigenvalue order
    std::array<int, 2> downstream_char_signs{};
    bool is_1_shock = false;
};

// Signs of the eigenvalues of the (symmetric) flux Jacobian on both sides.
// Throws DegenerateClassification if an eigenvalue is within 1e-10 of zero.
LaxReport lax_classify(const ShockPair& pair);

}  // namespace shockprof
