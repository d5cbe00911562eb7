#include "shockprof/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "shockprof/errors.hpp"
#include "shockprof/parallel.hpp"

namespace shockprof {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same_double(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

SweepRow make_row(const DissipationParams& p, double q_tilde, const IntegratorControls& c) {
    SweepRow row{q_tilde, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, "degenerate", "degenerate",
                 std::string(to_string(ProfileOutcome::inconclusive))};
    std::optional<ShockPair> pair;
    try {
        pair = shock_states(q_tilde);
    } catch (const InvalidInput&) {
        return row;
    }
    row.v_minus = pair->psi_minus.v();
    row.v_plus = pair->psi_plus.v();
    row.theta_minus = pair->psi_minus.theta();
    row.theta_plus = pair->psi_plus.theta();
    row.detB_minus = b_total(pair->psi_minus, p).det();
    row.detB_plus = b_total(pair->psi_plus, p).det();
    const auto kind_of = [&](const FluidState& s) -> std::string {
        try {
            return std::string(to_string(classify_rest_point(s, p, c.convention).kind));
        } catch (const SingularLinearization&) {
            return "degenerate";
        }
    };
    row.class_minus = kind_of(pair->psi_minus);
    row.class_plus = kind_of(pair->psi_plus);
    try {
        row.verdict = std::string(to_string(find_profile(q_tilde, p, c).outcome));
    } catch (const std::exception&) {
        row.verdict = std::string(to_string(ProfileOutcome::inconclusive));
    }
    return row;
}

}  // namespace

bool SweepRow::operator==(const SweepRow& o) const {
    return same_double(q_tilde, o.q_tilde) && same_double(v_minus, o.v_minus) &&
           same_double(v_plus, o.v_plus) && same_double(theta_minus, o.theta_minus) &&
           same_double(theta_plus, o.theta_plus) && same_double(detB_minus, o.detB_minus) &&
           same_double(detB_plus, o.detB_plus) && class_minus == o.class_minus &&
           class_plus == o.class_plus && verdict == o.verdict;
}

std::vector<SweepRow> sweep_q(const DissipationParams& p, const std::vector<double>& q_grid,
                              const IntegratorControls& c, unsigned threads) {
    c.validate();
    std::vector<SweepRow> rows(q_grid.size());
    parallel_for(q_grid.size(), threads, [&](std::size_t i) { rows[i] = make_row(p, q_grid[i], c); });
    return rows;
}

std::optional<double> critical_q(const DissipationParams& p, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("critical_q tolerance must be positive");
    const auto det_minus = [&p](double q_tilde) {
        const double v = shock_states(q_tilde).psi_minus.v();
        return det_b_closed_form(v * v, p);
    };
    // Scan uniformly in -log(1 - q_tilde), which resolves the q_tilde -> 1 end
    // where v_- diverges.
    constexpr double delta = 1e-9;
    constexpr int kScan = 2000;
    const double s_lo = -std::log(0.25 - delta);
    const double s_hi = -std::log(delta);
    double q_prev = 1.0 - std::exp(-s_lo);
    double g_prev = det_minus(q_prev);
    for (int i = 1; i <= kScan; ++i) {
        const double s = s_lo + (s_hi - s_lo) * static_cast<double>(i) / kScan;
        const double q_next = 1.0 - std::exp(-s);
        const double g_next = det_minus(q_next);
        if ((g_prev < 0.0) != (g_next < 0.0) || g_prev == 0.0) {
            double lo = q_prev;
            double hi = q_next;
            const bool lo_neg = g_prev < 0.0;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if ((det_minus(mid) < 0.0) == lo_neg) lo = mid; else hi = mid;
            }
            return 0.5 * (lo + hi);
        }
        q_prev = q_next;
        g_prev = g_next;
    }
    return std::nullopt;
}

std::vector<RegionCell> region_map(double eta, const std::vector<double>& mu_grid,
                                   const std::vector<double>& nu_grid, unsigned threads) {
    // Validate every coefficient before any work starts.
    for (double mu : mu_grid) {
        for (double nu : nu_grid) DissipationParams(eta, mu, nu);
    }
    std::vector<RegionCell> cells(mu_grid.size() * nu_grid.size());
    parallel_for(cells.size(), threads, [&](std::size_t k) {
        const double mu = mu_grid[k / nu_grid.size()];
        const double nu = nu_grid[k % nu_grid.size()];
        const DissipationParams p(eta, mu, nu);
        const CausalityReport rep = classify_causality(p);
        cells[k] = {mu, nu, rep.classification, critical_q(p).has_value(), rep.nu_star,
                    rep.sigma2_max()};
    });
    return cells;
}

void PortraitSpec::validate() const {
    if (nx < 2 || ny < 2) throw InvalidInput("portrait grid must be at least 2x2");
    if (window && !(window->x_min < window->x_max && window->y_min < window->y_max)) {
        throw InvalidInput("portrait window is empty");
    }
}

Vec2 to_plot(const Vec2& psi, PlotCoords coords) {
    if (coords == PlotCoords::psi) return psi;
    const FluidState s = FluidState::from_psi(psi);
    return {s.v(), s.theta()};
}

namespace {

std::optional<Vec2> from_plot(const Vec2& xy, PlotCoords coords) {
    if (coords == PlotCoords::psi) {
        if (!(xy.x > std::abs(xy.y))) return std::nullopt;
        return xy;
    }
    if (!(xy.y > 0.0)) return std::nullopt;
    return FluidState::from_theta_v(xy.y, xy.x).psi();
}

// Push a psi-plane tangent vector to plot coordinates.
Vec2 push_forward(const Vec2& psi, const Vec2& d, PlotCoords coords) {
    if (coords == PlotCoords::psi) return d;
    const FluidState s = FluidState::from_psi(psi);
    const double th = s.theta();
    const double dtheta = -th * th * th * (psi.x * d.x - psi.y * d.y);
    const double dv = psi.y * dtheta + th * d.y;
    return {dv, dtheta};
}

// Clip the ray {t * dir : t >= 0} to the window (Liang-Barsky).
std::optional<std::pair<Vec2, Vec2>> clip_ray(const Vec2& dir, const Window& w) {
    double t0 = 0.0;
    double t1 = std::numeric_limits<double>::infinity();
    const double p[4] = {-dir.x, dir.x, -dir.y, dir.y};
    const double q[4] = {-w.x_min, w.x_max, -w.y_min, w.y_max};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return std::nullopt;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) t0 = std::max(t0, r); else t1 = std::min(t1, r);
    }
    if (!(t0 < t1) || !std::isfinite(t1)) return std::nullopt;
    return std::pair{dir * t0, dir * t1};
}

PortraitOrbit to_portrait(const Orbit& o, PlotCoords coords, std::string label) {
    PortraitOrbit out;
    out.label = std::move(label);
    out.points.reserve(o.samples.size());
    for (const auto& s : o.samples) out.points.push_back(to_plot(s.psi, coords));
    return out;
}

}  // namespace

PortraitBundle portrait_data(const DissipationParams& p, double q_tilde, const PortraitSpec& spec,
                             const IntegratorControls& c) {
    spec.validate();
    c.validate();
    const ShockPair pair = shock_states(q_tilde);

    PortraitBundle bundle;
    bundle.coords = spec.coords;

    const auto kind_of = [&](const FluidState& s) -> std::string {
        try {
            return std::string(to_string(classify_rest_point(s, p).kind));
        } catch (const SingularLinearization&) {
            return "degenerate";
        }
    };
    const Vec2 pm = to_plot(pair.psi_minus.psi(), spec.coords);
    const Vec2 pp = to_plot(pair.psi_plus.psi(), spec.coords);
    bundle.rest_points.push_back({pm, "psi_minus", kind_of(pair.psi_minus)});
    bundle.rest_points.push_back({pp, "psi_plus", kind_of(pair.psi_plus)});

    if (spec.window) {
        bundle.window = *spec.window;
    } else {
        const double span = std::max({std::abs(pm.x - pp.x), std::abs(pm.y - pp.y), 0.1});
        bundle.window = {std::min(pm.x, pp.x) - 0.5 * span, std::max(pm.x, pp.x) + 0.5 * span,
                         std::min(pm.y, pp.y) - 0.5 * span, std::max(pm.y, pp.y) + 0.5 * span};
    }
    const Window& w = bundle.window;

    for (int j = 0; j < spec.ny; ++j) {
        for (int i = 0; i < spec.nx; ++i) {
            const Vec2 xy{w.x_min + (w.x_max - w.x_min) * i / (spec.nx - 1),
                          w.y_min + (w.y_max - w.y_min) * j / (spec.ny - 1)};
            const auto psi = from_plot(xy, spec.coords);
            if (!psi) continue;
            const FieldSample fs = vector_field(FluidState::from_psi(*psi), pair.q, p);
            const double orient = fs.det_b < 0.0 ? -1.0 : 1.0;
            const Vec2 d = push_forward(*psi, fs.desingularized * orient, spec.coords);
            const double mag = d.norm();
            bundle.field.push_back({xy, mag > 0.0 ? d * (1.0 / mag) : Vec2{}, std::log10(mag)});
        }
    }

    if (spec.include_shooting) {
        const ProfileVerdict verdict = find_profile(q_tilde, p, c);
        int k = 0;
        for (const Orbit& o : verdict.diagnostics.branches) {
            PortraitOrbit po = to_portrait(o, spec.coords, k++ == 0 ? "unstable+" : "unstable-");
            po.connecting = o.termination == Termination::converged && o.converged_psi &&
                            (*o.converged_psi - pair.psi_plus.psi()).norm() <=
                                1e-9 * pair.psi_plus.psi().norm();
            bundle.orbits.push_back(std::move(po));
        }
        // Backward orbits out of psi_+ along its eigendirections.
        try {
            const RestPointClass plus = classify_rest_point(pair.psi_plus, p);
            if (plus.eigenvalues.real) {
                IntegratorControls back = c;
                back.max_steps = std::min<long>(c.max_steps, 20000);
                const Vec2 base = pair.psi_plus.psi();
                for (const auto& lam : {plus.eigenvalues.first, plus.eigenvalues.second}) {
                    const Vec2 r = plus.linearization.eigenvector(lam.real());
                    for (double sgn : {1.0, -1.0}) {
                        const Vec2 start = base + r * (sgn * c.launch_offset * base.norm());
                        const Orbit o = integrate_orbit(FluidState::from_psi(start), -1, pair.q, p, back);
                        bundle.orbits.push_back(to_portrait(o, spec.coords, "backward-from-psi_plus"));
                    }
                }
            }
        } catch (const SingularLinearization&) {
        }
    }

    int seed_id = 0;
    for (const Vec2& seed : spec.seeds) {
        const auto psi = from_plot(seed, spec.coords);
        ++seed_id;
        if (!psi) continue;
        for (int sgn : {1, -1}) {
            try {
                const Orbit o = integrate_orbit(FluidState::from_psi(*psi), sgn, pair.q, p, c);
                bundle.orbits.push_back(to_portrait(
                    o, spec.coords, "seed" + std::to_string(seed_id) + (sgn > 0 ? "+" : "-")));
            } catch (const InvalidInput&) {
                // Seed outside the integration box.
            }
        }
    }

    if (spec.include_singular_lines) {
        for (double s : singular_speeds(p)) {
            const double signs[2] = {1.0, -1.0};
            for (int k = 0; k < (s > 0.0 ? 2 : 1); ++k) {
                const double v = signs[k] * s;
                if (spec.coords == PlotCoords::psi) {
                    const Vec2 dir{std::sqrt(1.0 + v * v), v};
                    if (auto seg = clip_ray(dir, w)) {
                        bundle.singular_lines.push_back({v, seg->first, seg->second});
                    }
                } else if (v >= w.x_min && v <= w.x_max) {
                    bundle.singular_lines.push_back({v, {v, w.y_min}, {v, w.y_max}});
                }
            }
        }
    }
    return bundle;
}

}  // namespace shockprof
