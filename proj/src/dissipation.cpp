#include "shockprof/dissipation.hpp"

#include <algorithm>
#include <cmath>

#include "shockprof/errors.hpp"

namespace shockprof {

DissipationParams::DissipationParams(double eta, double mu, double nu)
    : eta_(eta), mu_(mu), nu_(nu) {
    for (double c : {eta, mu, nu}) {
        if (!std::isfinite(c) || !(c > 0.0)) {
            throw InvalidInput("dissipation coefficients eta, mu, nu must be positive and finite");
        }
    }
}

std::optional<double> DissipationParams::nu_star() const {
    const double denom = 1.0 / (3.0 * eta_) - 1.0 / (9.0 * mu_);
    if (!(denom > 0.0)) return std::nullopt;
    return 1.0 / denom;
}

std::optional<double> DissipationParams::nu_star_product_form() const {
    if (!(3.0 * mu_ > eta_)) return std::nullopt;
    return 9.0 * eta_ * mu_ / (3.0 * mu_ - eta_);
}

std::optional<double> DissipationParams::nu_star_from_c4() const {
    const double et = eta_tilde();
    if (!(4.0 * mu_ > et)) return std::nullopt;
    return 9.0 * et * mu_ / (4.0 * mu_ - et);
}

BComponents b_components(const FluidState& s) {
    const double u = s.u();
    const double v = s.v();
    const double u2 = u * u;
    const double v2 = v * v;
    const double uv = u * v;
    const double w = 4.0 * v2 + 1.0;
    const double sum = u2 + v2;
    return {
        {u2 * v2, -u2 * uv, -u2 * uv, u2 * u2},
        {16.0 * u2 * v2, -4.0 * uv * w, -4.0 * uv * w, w * w},
        {sum * sum, -2.0 * sum * uv, -2.0 * sum * uv, 4.0 * u2 * v2},
    };
}

Mat2 b_total(const FluidState& s, const DissipationParams& p) {
    const BComponents c = b_components(s);
    return c.visc * p.eta_tilde() - c.ther * p.mu() - c.velo * p.nu();
}

DetBCoefficients det_b_coefficients(const DissipationParams& p) {
    const double et = p.eta_tilde();
    const double mu = p.mu();
    const double nu = p.nu();
    return {
        -9.0 * et * mu - et * nu + 4.0 * mu * nu,
        -9.0 * et * mu - 2.0 * et * nu - 4.0 * mu * nu,
        -et * nu + mu * nu,
    };
}

double det_b_closed_form(double v_squared, const DissipationParams& p) {
    const auto c = det_b_coefficients(p);
    return (c.c4 * v_squared + c.c2) * v_squared + c.c0;
}

std::vector<double> singular_speeds(const DissipationParams& p) {
    const auto c = det_b_coefficients(p);
    const double et = p.eta_tilde();
    const double scale = 9.0 * et * p.mu() + et * p.nu() + 4.0 * p.mu() * p.nu();
    const double tiny = 1e-12 * scale;

    std::vector<double> x;
    if (std::abs(c.c4) <= tiny) {
        // Sharply causal tuning: det B is linear in v^2.
        if (c.c2 != 0.0) x.push_back(-c.c0 / c.c2);
    } else {
        const double disc = c.c2 * c.c2 - 4.0 * c.c4 * c.c0;
        if (disc >= 0.0) {
            const double q = -0.5 * (c.c2 + std::copysign(std::sqrt(disc), c.c2));
            if (q != 0.0) {
                x.push_back(q / c.c4);
                x.push_back(c.c0 / q);
            } else {
                x.push_back(0.0);
            }
        }
    }

    std::vector<double> speeds;
    for (double r : x) {
        if (std::abs(r) <= tiny / scale) r = 0.0;
        if (r >= 0.0 && std::isfinite(r)) speeds.push_back(std::sqrt(r));
    }
    std::sort(speeds.begin(), speeds.end());
    speeds.erase(std::unique(speeds.begin(), speeds.end()), speeds.end());
    return speeds;
}

}  // namespace shockprof
