#include "shockprof/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shockprof {

namespace {

// Dormand & Prince (1980) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// Difference between the 5th- and 4th-order weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;

bool finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

}  // namespace

DormandPrince54::DormandPrince54(PlanarField field, Vec2 x0, StepperSettings settings)
    : field_(std::move(field)), settings_(settings), x_(x0), x_prev_(x0) {
    f_ = field_(x_);
    f_prev_ = f_;
    const double fn = f_.norm();
    const double scale = settings_.abs_tol + settings_.rel_tol * x_.norm();
    // Initial step moves the state by a few tolerance units.
    h_ = fn > 0.0 ? std::max(100.0 * scale / fn, 1e-12) : 1.0;
}

double DormandPrince54::error_norm(const Vec2& err, const Vec2& a, const Vec2& b) const {
    const double sx = settings_.abs_tol + settings_.rel_tol * std::max(std::abs(a.x), std::abs(b.x));
    const double sy = settings_.abs_tol + settings_.rel_tol * std::max(std::abs(a.y), std::abs(b.y));
    const double ex = err.x / sx;
    const double ey = err.y / sy;
    return std::sqrt(0.5 * (ex * ex + ey * ey));
}

DormandPrince54::Trial DormandPrince54::attempt(double h) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const Vec2& k1 = f_;
    const Vec2 k2 = field_(x_ + h * (a21 * k1));
    const Vec2 k3 = field_(x_ + h * (a31 * k1 + a32 * k2));
    const Vec2 k4 = field_(x_ + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec2 k5 = field_(x_ + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vec2 k6 = field_(x_ + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vec2 x_new = x_ + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec2 k7 = field_(x_new);
    if (!finite(k2) || !finite(k3) || !finite(k4) || !finite(k5) || !finite(k6) || !finite(k7) ||
        !finite(x_new)) {
        return {x_new, k7, inf};
    }
    const Vec2 err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double e = error_norm(err, x_, x_new);
    // Steps longer than the displacement cap count as failed.
    const double cap = settings_.max_rel_displacement * (1.0 + x_.norm());
    const double moved = (x_new - x_).norm();
    if (moved > cap) e = std::max(e, 1.0 + moved / cap);
    return {x_new, k7, e};
}

StepStatus DormandPrince54::step(const Admissible& admissible) {
    const double floor = 1e-14 * (1.0 + x_.norm());
    bool blocked_any = false;
    for (;;) {
        const double fn = f_.norm();
        // Displacement below the floor means no further progress is possible.
        if (h_ * fn < floor || h_ == 0.0) {
            return blocked_any ? StepStatus::blocked : StepStatus::underflow;
        }
        const Trial trial = attempt(h_);
        if (!(trial.error <= 1.0)) {
            ++rejected_;
            const double factor = std::isfinite(trial.error)
                                      ? std::max(kMinFactor, kSafety * std::pow(trial.error, -0.2))
                                      : kMinFactor;
            h_ *= std::min(factor, 0.9);
            continue;
        }
        if (admissible && !admissible(trial.x)) {
            blocked_any = true;
            h_ *= 0.5;
            // Within 1e-10 of the boundary the step counts as blocked.
            if (h_ * fn < 1e-10 * (1.0 + x_.norm())) return StepStatus::blocked;
            continue;
        }
        x_prev_ = x_;
        f_prev_ = f_;
        t_prev_ = t_;
        x_ = trial.x;
        f_ = trial.f_end;
        t_ += h_;
        const double factor =
            trial.error == 0.0 ? kMaxFactor
                               : std::clamp(kSafety * std::pow(trial.error, -0.2), kMinFactor, kMaxFactor);
        // After a blocked candidate, do not grow back into the boundary at once.
        h_ *= blocked_any ? std::min(factor, 1.0) : factor;
        return StepStatus::accepted;
    }
}

Vec2 DormandPrince54::interpolate(double s) const {
    const double h = t_ - t_prev_;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * x_prev_ + (h10 * h) * f_prev_ + h01 * x_ + (h11 * h) * f_;
}

}  // namespace shockprof
