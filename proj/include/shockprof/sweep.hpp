#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shockprof/causality.hpp"
#include "shockprof/profile.hpp"

namespace shockprof {

struct SweepRow {
    double q_tilde = 0.0;
    double v_minus = 0.0;
    double v_plus = 0.0;
    double theta_minus = 0.0;
    double theta_plus = 0.0;
    double detB_minus = 0.0;
    double detB_plus = 0.0;
    std::string class_minus;
    std::string class_plus;
    std::string verdict;

    bool operator==(const SweepRow&) const;
};

// One row per q_tilde, in input order. Failures are recorded in the row
// (verdict "inconclusive", non-finite numbers) instead of aborting.
std::vector<SweepRow> sweep_q(const DissipationParams& p, const std::vector<double>& q_grid,
                              const IntegratorControls& c = {}, unsigned threads = 1);

// First q_tilde in (3/4, 1) where det B(psi_-(q_tilde)) changes sign,
// located by bisection to `tol`. Empty when there is no sign change.
std::optional<double> critical_q(const DissipationParams& p, double tol = 1e-6);

struct RegionCell {
    double mu = 0.0;
    double nu = 0.0;
    CausalityClass causality = CausalityClass::strictly_causal;
    bool has_critical_q = false;
    std::optional<double> nu_star;
    double sigma2_max = 0.0;
};

// Row-major over (mu, nu): cell (i, j) sits at index i * nu_grid.size() + j.
std::vector<RegionCell> region_map(double eta, const std::vector<double>& mu_grid,
                                   const std::vector<double>& nu_grid, unsigned threads = 1);

enum class PlotCoords { psi, v_theta };

struct Window {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
};

struct PortraitSpec {
    PlotCoords coords = PlotCoords::psi;
    int nx = 25;
    int ny = 25;
    std::optional<Window> window;  // derived from the rest points when empty
    std::vector<Vec2> seeds;       // in plot coordinates; integrated both ways
    bool include_singular_lines = true;
    bool include_shooting = true;  // unstable branches of psi_- from find_profile

    void validate() const;
};

struct FieldArrow {
    Vec2 position;
    Vec2 direction;  // unit vector in plot coordinates, profile-time orientation
    double log10_magnitude = 0.0;
};

struct PortraitOrbit {
    std::vector<Vec2> points;  // plot coordinates
    std::string label;
    bool connecting = false;
};

struct PortraitRestPoint {
    Vec2 position;
    std::string name;  // "psi_minus" or "psi_plus"
    std::string kind;
};

struct SingularLine {
    double speed = 0.0;  // signed v of the line
    Vec2 from;
    Vec2 to;
};

struct PortraitBundle {
    PlotCoords coords = PlotCoords::psi;
    Window window;
    std::vector<FieldArrow> field;
    std::vector<PortraitOrbit> orbits;
    std::vector<PortraitRestPoint> rest_points;
    std::vector<SingularLine> singular_lines;
};

// Map a contravariant pair to plot coordinates.
Vec2 to_plot(const Vec2& psi, PlotCoords coords);

PortraitBundle portrait_data(const DissipationParams& p, double q_tilde, const PortraitSpec& spec,
                             const IntegratorControls& c = {});

}  // namespace shockprof
