#pragma once

// Reference computations written directly from the defining equations. They
// share no code with the library beyond the Vec2/Mat2 value types.

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "shockprof/mat2.hpp"

namespace oracle {

// Energy-flux mismatch along the momentum curve theta^4 = 3 q1 / (4 v^2 + 1):
// (4/3) theta^4 u v - q0 = 4 q1 u v / (4 v^2 + 1) - q0.
inline double energy_mismatch(double v, double q0, double q1) {
    const double u = std::sqrt(1.0 + v * v);
    return 4.0 * q1 * u * v / (4.0 * v * v + 1.0) - q0;
}

inline double theta_on_momentum_curve(double v, double q1) {
    return std::pow(3.0 * q1 / (4.0 * v * v + 1.0), 0.25);
}

// Plain bisection to machine resolution on a bracketing interval.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Shock velocities (v_+, v_-) of the normalised family q = (q_tilde^{-1/2}, 1).
// The mismatch peaks at v = 1/sqrt(2), which separates the two roots.
inline std::pair<double, double> shock_velocities(double q_tilde) {
    const double q0 = 1.0 / std::sqrt(q_tilde);
    auto f = [&](double v) { return energy_mismatch(v, q0, 1.0); };
    const double peak = 1.0 / std::sqrt(2.0);
    double hi = 2.0;
    while (f(hi) > 0.0) hi *= 2.0;
    return {bisect(f, 0.0, peak), bisect(f, peak, hi)};
}

// Number of solutions of T^{a1} = q found by sign changes of the mismatch,
// both signs of v. The scan is uniform with spacing `step` on |v| <= 10
// (where the double root at 1/sqrt(2) lives) and logarithmic up to v_max.
inline int count_solutions(double q0, double q1, double step = 1e-5, double v_max = 1e6) {
    if (!(q1 > 0.0)) return 0;
    if (q0 == 0.0) return 1;  // the static state v = 0
    std::vector<double> grid;
    for (double v = step; v < 10.0; v += step) grid.push_back(v);
    for (int i = 0; i <= 20000; ++i) grid.push_back(10.0 * std::pow(v_max / 10.0, i / 20000.0));
    int count = 0;
    for (int sign : {-1, 1}) {
        double prev = energy_mismatch(0.0, q0, q1);
        for (double v : grid) {
            const double cur = energy_mismatch(sign * v, q0, q1);
            if ((cur < 0.0) != (prev < 0.0)) ++count;
            prev = cur;
        }
    }
    return count;
}

// Central-difference Jacobian of a planar map.
inline shockprof::Mat2 fd_jacobian(const std::function<shockprof::Vec2(const shockprof::Vec2&)>& f,
                                   const shockprof::Vec2& x, double h = 1e-6) {
    const shockprof::Vec2 ex{h * std::max(1.0, std::abs(x.x)), 0.0};
    const shockprof::Vec2 ey{0.0, h * std::max(1.0, std::abs(x.y))};
    const shockprof::Vec2 dx = (f(x + ex) - f(x - ex)) * (0.5 / ex.x);
    const shockprof::Vec2 dy = (f(x + ey) - f(x - ey)) * (0.5 / ey.y);
    return {dx.x, dy.x, dx.y, dy.y};
}

// Roots of a s^2 + b s + c by the textbook formula in long double.
inline std::pair<std::complex<long double>, std::complex<long double>> quadratic_roots(long double a,
                                                                                       long double b,
                                                                                       long double c) {
    const std::complex<long double> d = std::sqrt(std::complex<long double>(b * b - 4 * a * c));
    auto r1 = (-b - d) / (2 * a);
    auto r2 = (-b + d) / (2 * a);
    if (r1.real() > r2.real()) std::swap(r1, r2);
    return {r1, r2};
}

// Squared characteristic speeds from the dispersion quadratic
// 9 mu nu s^2 - 3 mu (3 et + 2 nu) s - nu (et - mu), et = 4 eta / 3.
inline std::pair<double, double> sigma_squared(double eta, double mu, double nu) {
    const long double et = 4.0L * eta / 3.0L;
    const auto [a, b] = quadratic_roots(9.0L * mu * nu, -3.0L * mu * (3.0L * et + 2.0L * nu), -nu * (et - mu));
    return {static_cast<double>(a.real()), static_cast<double>(b.real())};
}

// Zeros in v >= 0 of a continuous function, located by sign scan + bisection.
inline std::vector<double> scan_zeros(const std::function<double(double)>& f, double v_max, int points) {
    std::vector<double> zeros;
    double prev_v = 0.0;
    double prev = f(0.0);
    for (int i = 1; i <= points; ++i) {
        const double v = v_max * i / points;
        const double cur = f(v);
        if ((cur < 0.0) != (prev < 0.0)) zeros.push_back(bisect(f, prev_v, v));
        prev = cur;
        prev_v = v;
    }
    return zeros;
}

}  // namespace oracle
