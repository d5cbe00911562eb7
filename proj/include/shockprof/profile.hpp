#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shockprof/dissipation.hpp"
#include "shockprof/hugoniot.hpp"
#include "shockprof/mat2.hpp"

namespace shockprof {

// Which index placement the profile system is written in. The covariant form
// is the diag(-1, 1) conjugate of the contravariant one.
enum class IndexConvention { contravariant, covariant };

enum class RestKind {
    saddle,
    attractor_node,
    attractor_focus,
    repeller_node,
    repeller_focus,
    degenerate,
};

std::string_view to_string(RestKind k);

struct RestPointClass {
    Eigenvalues2 eigenvalues;  // of B^{-1} A
    RestKind kind = RestKind::degenerate;
    double det_b = 0.0;
    double det_binv_a = 0.0;
    double trace = 0.0;
    Mat2 linearization;  // B^{-1} A in the requested convention

    bool is_attractor() const {
        return kind == RestKind::attractor_node || kind == RestKind::attractor_focus;
    }
    bool is_repeller() const {
        return kind == RestKind::repeller_node || kind == RestKind::repeller_focus;
    }
};

// Linearisation B(s)^{-1} A(s) of the profile system at a rest point.
// Throws SingularLinearization when |det B| <= 1e-12 |B|_F^2.
RestPointClass classify_rest_point(const FluidState& s, const DissipationParams& p,
                                   IndexConvention conv = IndexConvention::contravariant);

struct FieldSample {
    std::optional<Vec2> raw;  // B^{-1} F; empty where B is numerically singular
    Vec2 desingularized;      // adj(B) F = det(B) raw
    double det_b = 0.0;
};

// The profile field at s, in the coordinates of `conv`.
FieldSample vector_field(const FluidState& s, const FluxTarget& q, const DissipationParams& p,
                         IndexConvention conv = IndexConvention::contravariant);

struct IntegratorControls {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    double launch_offset = 1e-6;     // relative to |psi_-|
    double convergence_ball = 1e-6;  // relative to |rest point|
    long max_steps = 200000;
    double max_arc_length = 1e4;
    double theta_min = 1e-3;
    double theta_max = 1e3;
    double v_min = -50.0;
    double v_max = 50.0;
    double max_sample_spacing = 1e-2;  // relative to |psi|
    IndexConvention convention = IndexConvention::contravariant;

    // Throws InvalidInput when a control is non-positive or rel_tol >= convergence_ball.
    void validate() const;
};

enum class Termination {
    converged,
    left_domain,
    hit_singular_locus,
    step_limit,
    numerical_failure,
};

std::string_view to_string(Termination t);

enum class OrbitDirection { forward, backward };

struct OrbitSample {
    double t = 0.0;  // pseudo-time of the desingularised field
    Vec2 psi;        // contravariant pair
    double det_b = 0.0;

    FluidState state() const { return FluidState::from_psi(psi); }
};

struct Orbit {
    std::vector<OrbitSample> samples;
    Termination termination = Termination::step_limit;
    // Index into solve_T_eq_q(q) ordering (ascending v) when converged.
    std::optional<int> converged_to;
    std::optional<Vec2> converged_psi;
    OrbitDirection direction = OrbitDirection::forward;
    double arc_length = 0.0;
    long steps = 0;
    // At a singular-locus stop: adj(B) F was also negligible there.
    bool removable_singularity_suspected = false;
};

// Integrates x' = s0 adj(B(x)) F(x) with s0 = sign * sign(det B(start)), so
// sign = +1 follows profile time near the start. Stops on convergence to a
// rest point of F (after leaving its ball), a sign change of det B, domain
// exit, or budget exhaustion. Never throws for numerical trouble.
Orbit integrate_orbit(const FluidState& start, int sign, const FluxTarget& q,
                      const DissipationParams& p, const IntegratorControls& c = {});

enum class ProfileOutcome { exists, not_exists_attractor, not_exists_missed, inconclusive };

std::string_view to_string(ProfileOutcome o);

struct ProfileDiagnostics {
    std::optional<RestPointClass> minus_class;
    std::optional<RestPointClass> plus_class;
    std::vector<double> singular_speeds;
    // Number of singular speeds below |v| at each rest point; equal bands mean
    // no det B = 0 line separates the two states.
    int band_minus = 0;
    int band_plus = 0;
    std::vector<Orbit> branches;  // every orbit shot from psi_-
    std::string note;
};

struct ProfileVerdict {
    ProfileOutcome outcome = ProfileOutcome::inconclusive;
    std::optional<ShockPair> shock;
    std::optional<Orbit> orbit;  // the connecting orbit when outcome == exists
    ProfileDiagnostics diagnostics;
};

// Decides whether the shock with amplitude parameter q_tilde has a
// dissipation profile. Throws NoShockError for q_tilde outside (3/4, 1) and
// InvalidInput for bad controls; numerical trouble yields `inconclusive`.
ProfileVerdict find_profile(double q_tilde, const DissipationParams& p,
                            const IntegratorControls& c = {});

// Amplitude v_- - v_+ below which the verdict is not attempted.
inline constexpr double kMinResolvableAmplitude = 1e-5;

}  // namespace shockprof
