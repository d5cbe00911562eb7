#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shockprof/sweep.hpp"

namespace shockprof {

// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

// Exact parse of a format_double string; throws InvalidInput otherwise.
double parse_double(const std::string& s);

inline constexpr const char* kSweepHeader =
    "q_tilde,v_minus,v_plus,theta_minus,theta_plus,detB_minus,detB_plus,class_minus,class_plus,verdict";
inline constexpr const char* kPortraitHeader = "kind,seq,idx,x,y,aux";
inline constexpr const char* kRegionHeader = "mu,nu,causality,has_critical_q,nu_star,sigma2_max";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& is);

void write_region_csv(std::ostream& os, const std::vector<RegionCell>& cells);

// Orbit rows carry aux = 1 for the connecting orbit, 0 otherwise; singular
// rows carry the signed velocity of the line.
void write_portrait_csv(std::ostream& os, const PortraitBundle& bundle);

// A single orbit in the portrait schema (kind = orbit, seq = 0, aux = pseudo-time).
void write_orbit_csv(std::ostream& os, const Orbit& orbit, PlotCoords coords);

void write_portrait_svg(std::ostream& os, const PortraitBundle& bundle, int size_px = 800);

}  // namespace shockprof
