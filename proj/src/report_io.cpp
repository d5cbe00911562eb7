#include "shockprof/report_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "shockprof/errors.hpp"

namespace shockprof {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double x = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw InvalidInput("not a number: '" + s + "'");
    }
    return x;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kSweepHeader << '\n';
    for (const auto& r : rows) {
        os << format_double(r.q_tilde) << ',' << format_double(r.v_minus) << ','
           << format_double(r.v_plus) << ',' << format_double(r.theta_minus) << ','
           << format_double(r.theta_plus) << ',' << format_double(r.detB_minus) << ','
           << format_double(r.detB_plus) << ',' << r.class_minus << ',' << r.class_plus << ','
           << r.verdict << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kSweepHeader) {
        throw InvalidInput("sweep CSV: missing or unexpected header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 10) throw InvalidInput("sweep CSV: expected 10 fields: " + line);
        rows.push_back({parse_double(f[0]), parse_double(f[1]), parse_double(f[2]),
                        parse_double(f[3]), parse_double(f[4]), parse_double(f[5]),
                        parse_double(f[6]), f[7], f[8], f[9]});
    }
    return rows;
}

void write_region_csv(std::ostream& os, const std::vector<RegionCell>& cells) {
    os << kRegionHeader << '\n';
    for (const auto& c : cells) {
        os << format_double(c.mu) << ',' << format_double(c.nu) << ',' << to_string(c.causality)
           << ',' << (c.has_critical_q ? "true" : "false") << ','
           << (c.nu_star ? format_double(*c.nu_star) : std::string("nan")) << ','
           << format_double(c.sigma2_max) << '\n';
    }
}

namespace {

void row(std::ostream& os, const char* kind, std::size_t seq, std::size_t idx, const Vec2& xy,
         double aux) {
    os << kind << ',' << seq << ',' << idx << ',' << format_double(xy.x) << ','
       << format_double(xy.y) << ',' << format_double(aux) << '\n';
}

}  // namespace

void write_portrait_csv(std::ostream& os, const PortraitBundle& b) {
    os << kPortraitHeader << '\n';
    for (std::size_t i = 0; i < b.field.size(); ++i) {
        row(os, "field", 0, i, b.field[i].position, b.field[i].log10_magnitude);
    }
    for (std::size_t k = 0; k < b.orbits.size(); ++k) {
        const auto& o = b.orbits[k];
        for (std::size_t i = 0; i < o.points.size(); ++i) {
            row(os, "orbit", k, i, o.points[i], o.connecting ? 1.0 : 0.0);
        }
    }
    for (std::size_t k = 0; k < b.rest_points.size(); ++k) {
        row(os, "restpoint", k, 0, b.rest_points[k].position, 0.0);
    }
    for (std::size_t k = 0; k < b.singular_lines.size(); ++k) {
        const auto& l = b.singular_lines[k];
        row(os, "singular", k, 0, l.from, l.speed);
        row(os, "singular", k, 1, l.to, l.speed);
    }
}

void write_orbit_csv(std::ostream& os, const Orbit& orbit, PlotCoords coords) {
    os << kPortraitHeader << '\n';
    for (std::size_t i = 0; i < orbit.samples.size(); ++i) {
        row(os, "orbit", 0, i, to_plot(orbit.samples[i].psi, coords), orbit.samples[i].t);
    }
}

void write_portrait_svg(std::ostream& os, const PortraitBundle& b, int size_px) {
    const Window& w = b.window;
    const double margin = 40.0;
    const double span = size_px - 2.0 * margin;
    const auto px = [&](const Vec2& p) {
        return Vec2{margin + span * (p.x - w.x_min) / (w.x_max - w.x_min),
                    margin + span * (w.y_max - p.y) / (w.y_max - w.y_min)};
    };
    const auto pt = [](const Vec2& p) {
        std::ostringstream s;
        s.precision(6);
        s << p.x << ',' << p.y;
        return s.str();
    };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
       << size_px << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << span
       << "\" height=\"" << span << "\" fill=\"none\" stroke=\"black\"/>\n"
       << "<text x=\"" << size_px / 2 << "\" y=\"" << size_px - 10
       << "\" text-anchor=\"middle\" font-size=\"14\">"
       << (b.coords == PlotCoords::psi ? "psi0" : "v") << "</text>\n"
       << "<text x=\"12\" y=\"" << size_px / 2 << "\" font-size=\"14\">"
       << (b.coords == PlotCoords::psi ? "psi1" : "theta") << "</text>\n";

    os << "<g stroke=\"gray\" stroke-width=\"2\">\n";
    for (const auto& l : b.singular_lines) {
        os << "<line x1=\"" << px(l.from).x << "\" y1=\"" << px(l.from).y << "\" x2=\""
           << px(l.to).x << "\" y2=\"" << px(l.to).y << "\"/>\n";
    }
    os << "</g>\n";

    // Arrows span a fixed fraction of the mean grid spacing.
    const double arrow = 0.35 * span / std::sqrt(std::max<std::size_t>(b.field.size(), 1));
    os << "<g stroke=\"#4a7ab5\" stroke-width=\"1\" fill=\"none\">\n";
    for (const auto& f : b.field) {
        if (f.direction.norm() == 0.0) continue;
        const Vec2 a = px(f.position);
        // Screen y grows downwards.
        const Vec2 d{f.direction.x, -f.direction.y};
        const Vec2 tip = a + d * arrow;
        const Vec2 n{-d.y, d.x};
        const Vec2 h1 = tip - d * (0.35 * arrow) + n * (0.2 * arrow);
        const Vec2 h2 = tip - d * (0.35 * arrow) - n * (0.2 * arrow);
        os << "<polyline points=\"" << pt(a) << ' ' << pt(tip) << "\"/>"
           << "<polyline points=\"" << pt(h1) << ' ' << pt(tip) << ' ' << pt(h2) << "\"/>\n";
    }
    os << "</g>\n";

    for (const auto& o : b.orbits) {
        os << "<polyline fill=\"none\" stroke=\"" << (o.connecting ? "#c0392b" : "#222222")
           << "\" stroke-width=\"" << (o.connecting ? 3 : 1.5) << "\" points=\"";
        for (const auto& p : o.points) {
            const Vec2 q = px(p);
            if (std::isfinite(q.x) && std::isfinite(q.y)) os << pt(q) << ' ';
        }
        os << "\"><title>" << o.label << "</title></polyline>\n";
    }

    for (const auto& r : b.rest_points) {
        const Vec2 q = px(r.position);
        os << "<circle cx=\"" << q.x << "\" cy=\"" << q.y << "\" r=\"6\" fill=\""
           << (r.name == "psi_minus" ? "#e67e22" : "#27ae60") << "\" stroke=\"black\"><title>"
           << r.name << " (" << r.kind << ")</title></circle>\n";
    }
    os << "</svg>\n";
}

}  // namespace shockprof
