#include "shockprof/profile.hpp"

#include <cmath>
#include <limits>

#include "shockprof/errors.hpp"
#include "shockprof/integrator.hpp"

namespace shockprof {

namespace {

constexpr Mat2 kFlip = Mat2::diag(-1.0, 1.0);

Mat2 conjugate(const Mat2& m, IndexConvention conv) {
    return conv == IndexConvention::covariant ? kFlip * m * kFlip : m;
}

Vec2 flip(const Vec2& v, IndexConvention conv) {
    return conv == IndexConvention::covariant ? Vec2{-v.x, v.y} : v;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

bool inside_cone(const Vec2& psi) {
    return std::isfinite(psi.x) && std::isfinite(psi.y) && psi.x > std::abs(psi.y);
}

}  // namespace

std::string_view to_string(RestKind k) {
    switch (k) {
        case RestKind::saddle: return "saddle";
        case RestKind::attractor_node: return "attractor-node";
        case RestKind::attractor_focus: return "attractor-focus";
        case RestKind::repeller_node: return "repeller-node";
        case RestKind::repeller_focus: return "repeller-focus";
        case RestKind::degenerate: return "degenerate";
    }
    return "unknown";
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::converged: return "converged";
        case Termination::left_domain: return "left-domain";
        case Termination::hit_singular_locus: return "hit-singular-locus";
        case Termination::step_limit: return "step-limit";
        case Termination::numerical_failure: return "numerical-failure";
    }
    return "unknown";
}

std::string_view to_string(ProfileOutcome o) {
    switch (o) {
        case ProfileOutcome::exists: return "exists";
        case ProfileOutcome::not_exists_attractor: return "not-exists-attractor";
        case ProfileOutcome::not_exists_missed: return "not-exists-missed";
        case ProfileOutcome::inconclusive: return "inconclusive";
    }
    return "unknown";
}

RestPointClass classify_rest_point(const FluidState& s, const DissipationParams& p,
                                   IndexConvention conv) {
    const Mat2 b = conjugate(b_total(s, p), conv);
    const Mat2 a = conjugate(flux_jacobian(s), conv);
    const double det_b = b.det();
    const double bn = b.frobenius();
    if (!(std::abs(det_b) > 1e-12 * bn * bn)) {
        throw SingularLinearization("det B vanishes at v = " + std::to_string(s.v()));
    }

    RestPointClass out;
    out.linearization = b.inverse() * a;
    out.det_b = det_b;
    out.det_binv_a = out.linearization.det();
    out.trace = out.linearization.trace();
    out.eigenvalues = out.linearization.eigenvalues();

    const double scale = out.linearization.frobenius();
    const double det_tol = 1e-10 * scale * scale;
    const double tr_tol = 1e-10 * scale;
    const bool real = out.eigenvalues.real;
    if (out.det_binv_a < -det_tol) {
        out.kind = RestKind::saddle;
    } else if (out.det_binv_a > det_tol && out.trace < -tr_tol) {
        out.kind = real ? RestKind::attractor_node : RestKind::attractor_focus;
    } else if (out.det_binv_a > det_tol && out.trace > tr_tol) {
        out.kind = real ? RestKind::repeller_node : RestKind::repeller_focus;
    } else {
        out.kind = RestKind::degenerate;
    }
    return out;
}

FieldSample vector_field(const FluidState& s, const FluxTarget& q, const DissipationParams& p,
                         IndexConvention conv) {
    const Mat2 b = conjugate(b_total(s, p), conv);
    const Vec2 f = flip(profile_rhs(s, q), conv);
    FieldSample out;
    out.det_b = b.det();
    out.desingularized = b.adjugate() * f;
    const double bn = b.frobenius();
    if (std::abs(out.det_b) > 1e-12 * bn * bn) {
        out.raw = out.desingularized * (1.0 / out.det_b);
    }
    return out;
}

void IntegratorControls::validate() const {
    const double positives[] = {rel_tol, abs_tol, launch_offset, convergence_ball,
                                max_arc_length, theta_min, theta_max, max_sample_spacing};
    for (double x : positives) {
        if (!std::isfinite(x) || !(x > 0.0)) {
            throw InvalidInput("integrator controls must be positive and finite");
        }
    }
    if (max_steps <= 0) throw InvalidInput("max_steps must be positive");
    if (!(theta_min < theta_max) || !(v_min < v_max)) {
        throw InvalidInput("integrator domain box is empty");
    }
    if (!(rel_tol < convergence_ball)) {
        throw InvalidInput("rel_tol must be smaller than the convergence ball");
    }
}

Orbit integrate_orbit(const FluidState& start, int sign, const FluxTarget& q,
                      const DissipationParams& p, const IntegratorControls& c) {
    c.validate();
    if (sign != 1 && sign != -1) throw InvalidInput("orbit sign must be +1 or -1");

    const auto in_box = [&c](const FluidState& s) {
        return s.theta() >= c.theta_min && s.theta() <= c.theta_max && s.v() >= c.v_min &&
               s.v() <= c.v_max;
    };
    if (!in_box(start)) throw InvalidInput("orbit start lies outside the integration domain");

    const IndexConvention conv = c.convention;
    const Vec2 psi0 = start.psi();
    Orbit orbit;
    orbit.direction = sign > 0 ? OrbitDirection::forward : OrbitDirection::backward;

    const double det0 = b_total(start, p).det();
    orbit.samples.push_back({0.0, psi0, det0});

    const std::vector<FluidState> rest = solve_T_eq_q(q.q0, q.q1);
    std::vector<Vec2> rest_psi;
    std::vector<double> ball;
    std::vector<bool> eligible;
    for (const auto& r : rest) {
        const Vec2 rp = r.psi();
        rest_psi.push_back(rp);
        ball.push_back(c.convergence_ball * rp.norm());
        const double d = (psi0 - rp).norm();
        if (d <= 1e-13 * rp.norm()) {
            orbit.termination = Termination::converged;
            orbit.converged_to = static_cast<int>(rest_psi.size()) - 1;
            orbit.converged_psi = rp;
            return orbit;
        }
        eligible.push_back(d >= ball.back());
    }

    const int det_sign = sign_of(det0);
    if (det_sign == 0) {
        orbit.termination = Termination::hit_singular_locus;
        return orbit;
    }
    const double s0 = static_cast<double>(sign * det_sign);

    const PlanarField field = [&](const Vec2& w) -> Vec2 {
        const Vec2 psi = flip(w, conv);
        if (!inside_cone(psi)) {
            constexpr double nan = std::numeric_limits<double>::quiet_NaN();
            return {nan, nan};
        }
        return vector_field(FluidState::from_psi(psi), q, p, conv).desingularized * s0;
    };
    const Admissible same_side = [&](const Vec2& w) {
        const Vec2 psi = flip(w, conv);
        if (!inside_cone(psi)) return false;
        return sign_of(b_total(FluidState::from_psi(psi), p).det()) == det_sign;
    };

    StepperSettings settings;
    settings.rel_tol = c.rel_tol;
    settings.abs_tol = c.abs_tol;
    DormandPrince54 stepper(field, flip(psi0, conv), settings);

    const auto record = [&](double t, const Vec2& psi) {
        orbit.arc_length += (psi - orbit.samples.back().psi).norm();
        orbit.samples.push_back({t, psi, b_total(FluidState::from_psi(psi), p).det()});
    };

    orbit.termination = Termination::step_limit;
    while (orbit.steps < c.max_steps && orbit.arc_length < c.max_arc_length) {
        const StepStatus status = stepper.step(same_side);
        if (status == StepStatus::blocked) {
            orbit.termination = Termination::hit_singular_locus;
            const Vec2 psi = flip(stepper.state(), conv);
            const FluidState s = FluidState::from_psi(psi);
            const Mat2 b = b_total(s, p);
            const Vec2 f = profile_rhs(s, q);
            const double ref = b.adjugate().frobenius() * f.norm();
            orbit.removable_singularity_suspected =
                ref == 0.0 || (b.adjugate() * f).norm() <= 1e-6 * ref;
            break;
        }
        if (status == StepStatus::underflow) {
            orbit.termination = Termination::numerical_failure;
            break;
        }
        ++orbit.steps;

        const Vec2 psi = flip(stepper.state(), conv);
        if (!inside_cone(psi) || !in_box(FluidState::from_psi(psi))) {
            orbit.termination = Termination::left_domain;
            break;
        }

        // Densify so consecutive samples are at most max_sample_spacing apart.
        const Vec2 last = orbit.samples.back().psi;
        const double spacing = c.max_sample_spacing * psi.norm();
        const int pieces = static_cast<int>(std::ceil((psi - last).norm() / spacing));
        const double t0 = stepper.previous_time();
        const double t1 = stepper.time();
        for (int i = 1; i < pieces; ++i) {
            const double sfrac = static_cast<double>(i) / pieces;
            const Vec2 mid = flip(stepper.interpolate(sfrac), conv);
            if (inside_cone(mid)) record(t0 + sfrac * (t1 - t0), mid);
        }
        record(t1, psi);

        const Vec2 dir = flip(stepper.derivative(), conv);
        bool done = false;
        for (std::size_t k = 0; k < rest_psi.size(); ++k) {
            const Vec2 offset = psi - rest_psi[k];
            const double d = offset.norm();
            if (d >= ball[k]) {
                eligible[k] = true;
            } else if (eligible[k] && offset.dot(dir) < 0.0) {
                orbit.termination = Termination::converged;
                orbit.converged_to = static_cast<int>(k);
                orbit.converged_psi = rest_psi[k];
                done = true;
                break;
            }
        }
        if (done) break;
    }
    return orbit;
}

namespace {

int band_of(double v, const std::vector<double>& speeds) {
    int n = 0;
    for (double s : speeds) n += std::abs(v) > s ? 1 : 0;
    return n;
}

}  // namespace

ProfileVerdict find_profile(double q_tilde, const DissipationParams& p,
                            const IntegratorControls& c) {
    c.validate();
    ProfileVerdict verdict;
    const ShockPair pair = shock_states(q_tilde);
    verdict.shock = pair;

    auto& diag = verdict.diagnostics;
    diag.singular_speeds = singular_speeds(p);
    diag.band_minus = band_of(pair.psi_minus.v(), diag.singular_speeds);
    diag.band_plus = band_of(pair.psi_plus.v(), diag.singular_speeds);

    try {
        diag.plus_class = classify_rest_point(pair.psi_plus, p, c.convention);
    } catch (const SingularLinearization&) {
        // Reported as missing; the decision hinges on psi_- only.
    }

    if (pair.amplitude() < kMinResolvableAmplitude) {
        diag.note = "amplitude below resolvable threshold";
        return verdict;
    }

    try {
        diag.minus_class = classify_rest_point(pair.psi_minus, p, c.convention);
    } catch (const SingularLinearization& e) {
        diag.note = e.what();
        return verdict;
    }
    const RestPointClass& minus = *diag.minus_class;

    if (minus.is_attractor() || minus.is_repeller()) {
        // Both eigenvalues share a sign: no orbit can leave psi_- along a
        // one-dimensional unstable manifold.
        verdict.outcome = ProfileOutcome::not_exists_attractor;
        diag.note = std::string("psi_- is ") + std::string(to_string(minus.kind));
        return verdict;
    }
    if (minus.kind != RestKind::saddle) {
        diag.note = "psi_- is degenerate";
        return verdict;
    }

    const double unstable = minus.eigenvalues.second.real();
    const Vec2 r = flip(minus.linearization.eigenvector(unstable), c.convention);
    const Vec2 base = pair.psi_minus.psi();
    const double offset = c.launch_offset * base.norm();
    const Vec2 target = pair.psi_plus.psi();

    bool budget_hit = false;
    for (double branch : {1.0, -1.0}) {
        const Vec2 launch = base + r * (branch * offset);
        Orbit orbit = integrate_orbit(FluidState::from_psi(launch), 1, pair.q, p, c);
        const bool hit_plus = orbit.termination == Termination::converged && orbit.converged_psi &&
                              (*orbit.converged_psi - target).norm() <= 1e-9 * target.norm();
        if (orbit.termination == Termination::step_limit ||
            orbit.termination == Termination::numerical_failure) {
            budget_hit = true;
        }
        diag.branches.push_back(orbit);
        if (hit_plus && !verdict.orbit) {
            verdict.orbit = std::move(orbit);
        }
    }

    if (verdict.orbit) {
        verdict.outcome = ProfileOutcome::exists;
    } else if (budget_hit) {
        diag.note = "an unstable branch exhausted its budget";
    } else {
        verdict.outcome = ProfileOutcome::not_exists_missed;
        diag.note = "both unstable branches terminate away from psi_+";
    }
    return verdict;
}

}  // namespace shockprof
