#pragma once

#include <functional>

#include "shockprof/mat2.hpp"

namespace shockprof {

// Autonomous planar vector field. May return non-finite components to mark a
// point outside its domain; such trial steps are rejected.
using PlanarField = std::function<Vec2(const Vec2&)>;

// Predicate on candidate step endpoints; a false result shrinks the step.
using Admissible = std::function<bool(const Vec2&)>;

struct StepperSettings {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    // Upper bound on the displacement of one step, relative to 1 + |x|.
    double max_rel_displacement = 1e-2;
};

enum class StepStatus {
    accepted,
    blocked,    // every candidate endpoint was inadmissible down to a vanishing step
    underflow,  // error control drove the step to zero
};

// Dormand-Prince 5(4) with FSAL and a standard step-size controller.
class DormandPrince54 {
public:
    DormandPrince54(PlanarField field, Vec2 x0, StepperSettings settings);

    StepStatus step(const Admissible& admissible = {});

    const Vec2& state() const { return x_; }
    const Vec2& derivative() const { return f_; }
    double time() const { return t_; }
    double step_size() const { return h_; }

    const Vec2& previous_state() const { return x_prev_; }
    double previous_time() const { return t_prev_; }

    // Cubic Hermite interpolant over the last accepted step, s in [0, 1].
    Vec2 interpolate(double s) const;

    int rejected_steps() const { return rejected_; }

private:
    struct Trial {
        Vec2 x;
        Vec2 f_end;
        double error;
    };

    Trial attempt(double h) const;
    double error_norm(const Vec2& err, const Vec2& a, const Vec2& b) const;

    PlanarField field_;
    StepperSettings settings_;
    Vec2 x_;
    Vec2 f_;
    double t_ = 0.0;
    double h_ = 0.0;
    Vec2 x_prev_;
    Vec2 f_prev_;
    double t_prev_ = 0.0;
    int rejected_ = 0;
};

}  // namespace shockprof
