#include "shockprof/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "shockprof/causality.hpp"
#include "shockprof/errors.hpp"
#include "shockprof/hugoniot.hpp"
#include "shockprof/profile.hpp"
#include "shockprof/report_io.hpp"
#include "shockprof/sweep.hpp"

namespace shockprof::cli {

using Json = nlohmann::ordered_json;

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw InvalidInput("grid spec must be min:max:count, got '" + spec + "'");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    long count = 0;
    try {
        std::size_t used = 0;
        count = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::exception&) {
        throw InvalidInput("grid count must be an integer, got '" + parts[2] + "'");
    }
    if (count < 1) throw InvalidInput("grid count must be at least 1");
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidInput("grid bounds must be finite");
    std::vector<double> g(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        g[static_cast<std::size_t>(i)] =
            count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return g;
}

namespace {

enum class Format { table, csv, json };

struct Options {
    double eta = 1.0;
    double mu = 7.0;
    double nu = 20.0;
    double q_tilde = 0.775;
    double q0 = 1.0 / std::sqrt(0.775);
    double q1 = 1.0;
    std::string q_grid = "0.76:0.99:24";
    std::string mu_grid = "1:12:12";
    std::string nu_grid = "1:30:30";
    double critical_tol = 1e-6;
    double luminal_tol = kLuminalTol;
    bool adjudicate = false;
    std::string which = "both";
    IntegratorControls controls;
    std::string convention = "contravariant";
    std::string format = "table";
    std::string out;
    std::string svg;
    std::string config;
    int threads = 0;
    std::string coords = "psi";
    std::string grid = "25x25";
    std::string window;
    std::vector<std::string> seeds;
    bool no_shooting = false;
};

Format format_of(const Options& o) {
    if (o.format == "csv") return Format::csv;
    if (o.format == "json") return Format::json;
    return Format::table;
}

DissipationParams params_of(const Options& o) { return {o.eta, o.mu, o.nu}; }

unsigned thread_count(const Options& o) {
    unsigned n = o.threads > 0 ? static_cast<unsigned>(o.threads)
                               : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SHOCKPROF_THREADS")) {
        long cap = 0;
        try {
            std::size_t used = 0;
            cap = std::stol(env, &used);
            if (used != std::string(env).size()) cap = 0;
        } catch (const std::exception&) {
            cap = 0;
        }
        if (cap < 1) throw InvalidInput("SHOCKPROF_THREADS must be a positive integer");
        n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

// ---------------------------------------------------------------- output

std::string scalar_text(const Json& v) {
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "nan";
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ";") + scalar_text(e);
    return s;
}

void flatten(const Json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten(*it, key, out);
        } else {
            out.emplace_back(key, scalar_text(*it));
        }
    }
}

Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json num(const std::optional<double>& x) { return x ? num(*x) : Json(nullptr); }

Json complex_json(const std::complex<double>& z) {
    if (z.imag() == 0.0) return num(z.real());
    return Json{{"re", num(z.real())}, {"im", num(z.imag())}};
}

void emit_record(const Json& rec, Format f, std::ostream& os) {
    if (f == Format::json) {
        os << rec.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(rec, "", kv);
    if (f == Format::csv) {
        for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].first;
        os << '\n';
        for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].second;
        os << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : kv) width = std::max(width, k.size());
    for (const auto& [k, v] : kv) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

// Tabular outputs: aligned columns in table mode, JSON array otherwise.
void emit_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                std::ostream& os) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) {
        w[j] = header[j].size();
        for (const auto& r : rows) w[j] = std::max(w[j], r[j].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
            os << std::left << std::setw(static_cast<int>(w[j]) + 2) << cells[j];
        }
        os << cells.back() << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

// Writes through --out when given, otherwise to stdout.
template <typename Writer>
void write_output(const Options& o, std::ostream& out, Writer&& w) {
    if (o.out.empty()) {
        w(out);
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output file '" + o.out + "'");
    w(f);
}

Json state_json(const FluidState& s) {
    const Vec2 psi = s.psi();
    return Json{{"theta", num(s.theta())}, {"v", num(s.v())}, {"psi0", num(psi.x)}, {"psi1", num(psi.y)}};
}

Json rest_class_json(const RestPointClass& c) {
    return Json{{"kind", std::string(to_string(c.kind))},
                {"eigenvalues", Json::array({complex_json(c.eigenvalues.first), complex_json(c.eigenvalues.second)})},
                {"detB", num(c.det_b)},
                {"det_Binv_A", num(c.det_binv_a)},
                {"trace_Binv_A", num(c.trace)}};
}

std::string signs_text(const std::array<int, 2>& s) {
    return std::string(s[0] > 0 ? "+" : "-") + (s[1] > 0 ? "+" : "-");
}

// ---------------------------------------------------------------- commands

int cmd_hugoniot(const Options& o, std::ostream& out) {
    const ShockPair pair = shock_states(o.q_tilde);
    const LaxReport lax = lax_classify(pair);
    Json rec{{"q_tilde", num(o.q_tilde)},
             {"q0", num(pair.q.q0)},
             {"q1", num(pair.q.q1)},
             {"psi_minus", state_json(pair.psi_minus)},
             {"psi_plus", state_json(pair.psi_plus)},
             {"amplitude", num(pair.amplitude())},
             {"lax", Json{{"upstream", signs_text(lax.upstream_char_signs)},
                          {"downstream", signs_text(lax.downstream_char_signs)},
                          {"is_1_shock", lax.is_1_shock}}}};
    write_output(o, out, [&](std::ostream& os) { emit_record(rec, format_of(o), os); });
    return kExitOk;
}

int cmd_solve_q(const Options& o, std::ostream& out) {
    const auto states = solve_T_eq_q(o.q0, o.q1);
    const Format f = format_of(o);
    write_output(o, out, [&](std::ostream& os) {
        if (f == Format::json) {
            Json arr = Json::array();
            for (const auto& s : states) arr.push_back(state_json(s));
            os << Json{{"q0", num(o.q0)}, {"q1", num(o.q1)}, {"count", states.size()}, {"states", arr}}.dump(2)
               << '\n';
            return;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : states) {
            rows.push_back({format_double(s.theta()), format_double(s.v()), format_double(s.psi().x),
                            format_double(s.psi().y)});
        }
        const std::vector<std::string> header{"theta", "v", "psi0", "psi1"};
        if (f == Format::csv) {
            os << "theta,v,psi0,psi1\n";
            for (const auto& r : rows) os << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
        } else {
            os << "solutions " << states.size() << '\n';
            if (!rows.empty()) emit_table(header, rows, os);
        }
    });
    return kExitOk;
}

int cmd_causality(const Options& o, std::ostream& out) {
    const DissipationParams p = params_of(o);
    const CausalityReport rep = classify_causality(p, o.luminal_tol);
    Json rec{{"eta", num(o.eta)},
             {"mu", num(o.mu)},
             {"nu", num(o.nu)},
             {"eta_tilde", num(p.eta_tilde())},
             {"classification", std::string(to_string(rep.classification))},
             {"sigma2", Json::array({complex_json(rep.sigma_squared[0]), complex_json(rep.sigma_squared[1])})},
             {"discriminant", num(rep.discriminant)},
             {"pi_at_one", num(rep.pi_at_one)},
             {"nu_star", num(rep.nu_star)}};
    if (o.adjudicate) {
        rec["inequality"] = Json{{"general", rep.inequality_general},
                                 {"strict", rep.inequality_strict},
                                 {"sharp", rep.inequality_sharp},
                                 {"roots_say_causal", rep.classification == CausalityClass::strictly_causal ||
                                                          rep.classification == CausalityClass::sharply_causal},
                                 {"verdict", rep.inequality_disagrees ? "DISAGREE" : "agree"}};
    }
    write_output(o, out, [&](std::ostream& os) { emit_record(rec, format_of(o), os); });
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    if (o.which != "minus" && o.which != "plus" && o.which != "both") {
        throw InvalidInput("--which must be minus, plus or both");
    }
    const DissipationParams p = params_of(o);
    const ShockPair pair = shock_states(o.q_tilde);
    Json rec{{"q_tilde", num(o.q_tilde)}};
    if (o.which != "plus") {
        rec["psi_minus"] = state_json(pair.psi_minus);
        rec["psi_minus"]["class"] = rest_class_json(classify_rest_point(pair.psi_minus, p, o.controls.convention));
    }
    if (o.which != "minus") {
        rec["psi_plus"] = state_json(pair.psi_plus);
        rec["psi_plus"]["class"] = rest_class_json(classify_rest_point(pair.psi_plus, p, o.controls.convention));
    }
    write_output(o, out, [&](std::ostream& os) { emit_record(rec, format_of(o), os); });
    return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out, std::ostream& err) {
    const DissipationParams p = params_of(o);
    const ProfileVerdict v = find_profile(o.q_tilde, p, o.controls);
    const auto& d = v.diagnostics;
    Json branches = Json::array();
    for (const auto& b : d.branches) {
        branches.push_back(Json{{"termination", std::string(to_string(b.termination))},
                                {"samples", b.samples.size()},
                                {"arc_length", num(b.arc_length)}});
    }
    Json rec{{"q_tilde", num(o.q_tilde)},
             {"eta", num(o.eta)},
             {"mu", num(o.mu)},
             {"nu", num(o.nu)},
             {"verdict", std::string(to_string(v.outcome))},
             {"class_minus", d.minus_class ? std::string(to_string(d.minus_class->kind)) : "n/a"},
             {"class_plus", d.plus_class ? std::string(to_string(d.plus_class->kind)) : "n/a"},
             {"singular_speeds", Json::array()},
             {"band_minus", d.band_minus},
             {"band_plus", d.band_plus},
             {"note", d.note}};
    for (double s : d.singular_speeds) rec["singular_speeds"].push_back(num(s));
    if (v.orbit) {
        const auto& end = v.orbit->samples.back().psi;
        rec["orbit"] = Json{{"samples", v.orbit->samples.size()},
                            {"arc_length", num(v.orbit->arc_length)},
                            {"end_distance_rel", num((end - v.shock->psi_plus.psi()).norm() /
                                                     v.shock->psi_plus.psi().norm())}};
    }
    if (format_of(o) == Format::json) rec["branches"] = branches;

    // --out carries the connecting orbit; the verdict always goes to stdout.
    emit_record(rec, format_of(o), out);
    if (!o.out.empty() && v.orbit) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw InvalidInput("cannot open output file '" + o.out + "'");
        write_orbit_csv(f, *v.orbit, PlotCoords::psi);
    }
    if (v.outcome == ProfileOutcome::inconclusive) {
        err << "profile: inconclusive verdict: " << d.note << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    const DissipationParams p = params_of(o);
    const auto grid = parse_grid(o.q_grid);
    const auto rows = sweep_q(p, grid, o.controls, thread_count(o));
    const Format f = format_of(o);
    write_output(o, out, [&](std::ostream& os) {
        if (f == Format::csv) {
            write_sweep_csv(os, rows);
        } else if (f == Format::json) {
            Json arr = Json::array();
            for (const auto& r : rows) {
                arr.push_back(Json{{"q_tilde", num(r.q_tilde)},     {"v_minus", num(r.v_minus)},
                                   {"v_plus", num(r.v_plus)},       {"theta_minus", num(r.theta_minus)},
                                   {"theta_plus", num(r.theta_plus)}, {"detB_minus", num(r.detB_minus)},
                                   {"detB_plus", num(r.detB_plus)}, {"class_minus", r.class_minus},
                                   {"class_plus", r.class_plus},    {"verdict", r.verdict}});
            }
            os << arr.dump(2) << '\n';
        } else {
            std::vector<std::vector<std::string>> body;
            for (const auto& r : rows) {
                body.push_back({format_double(r.q_tilde), format_double(r.v_minus), format_double(r.v_plus),
                                format_double(r.detB_minus), r.class_minus, r.class_plus, r.verdict});
            }
            emit_table({"q_tilde", "v_minus", "v_plus", "detB_minus", "class_minus", "class_plus", "verdict"},
                       body, os);
        }
    });
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) {
        return r.verdict == to_string(ProfileOutcome::inconclusive);
    });
    if (bad > 0) {
        err << "sweep: " << bad << " row(s) inconclusive\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_critical_q(const Options& o, std::ostream& out) {
    const DissipationParams p = params_of(o);
    const auto q = critical_q(p, o.critical_tol);
    Json rec{{"eta", num(o.eta)}, {"mu", num(o.mu)}, {"nu", num(o.nu)}, {"critical_q", num(q)}};
    if (q) {
        const double v = shock_states(*q).psi_minus.v();
        rec["v_minus_squared"] = num(v * v);
    }
    write_output(o, out, [&](std::ostream& os) { emit_record(rec, format_of(o), os); });
    return kExitOk;
}

int cmd_region(const Options& o, std::ostream& out) {
    const auto cells = region_map(o.eta, parse_grid(o.mu_grid), parse_grid(o.nu_grid), thread_count(o));
    const Format f = format_of(o);
    write_output(o, out, [&](std::ostream& os) {
        if (f == Format::csv) {
            write_region_csv(os, cells);
        } else if (f == Format::json) {
            Json arr = Json::array();
            for (const auto& c : cells) {
                arr.push_back(Json{{"mu", num(c.mu)},
                                   {"nu", num(c.nu)},
                                   {"causality", std::string(to_string(c.causality))},
                                   {"has_critical_q", c.has_critical_q},
                                   {"nu_star", num(c.nu_star)},
                                   {"sigma2_max", num(c.sigma2_max)}});
            }
            os << arr.dump(2) << '\n';
        } else {
            std::vector<std::vector<std::string>> body;
            for (const auto& c : cells) {
                body.push_back({format_double(c.mu), format_double(c.nu), std::string(to_string(c.causality)),
                                c.has_critical_q ? "yes" : "no",
                                c.nu_star ? format_double(*c.nu_star) : "nan", format_double(c.sigma2_max)});
            }
            emit_table({"mu", "nu", "causality", "critical_q", "nu_star", "sigma2_max"}, body, os);
        }
    });
    return kExitOk;
}

Vec2 parse_pair(const std::string& s, char sep) {
    const auto pos = s.find(sep);
    if (pos == std::string::npos) throw InvalidInput("expected two values separated by '" + std::string(1, sep) + "'");
    return {parse_double(s.substr(0, pos)), parse_double(s.substr(pos + 1))};
}

int cmd_portrait(const Options& o, std::ostream& out) {
    const DissipationParams p = params_of(o);
    PortraitSpec spec;
    if (o.coords == "psi") {
        spec.coords = PlotCoords::psi;
    } else if (o.coords == "v-theta") {
        spec.coords = PlotCoords::v_theta;
    } else {
        throw InvalidInput("--coords must be psi or v-theta");
    }
    const auto x = o.grid.find('x');
    if (x == std::string::npos) throw InvalidInput("--grid must look like NxM");
    try {
        spec.nx = std::stoi(o.grid.substr(0, x));
        spec.ny = std::stoi(o.grid.substr(x + 1));
    } catch (const std::exception&) {
        throw InvalidInput("--grid must look like NxM");
    }
    if (!o.window.empty()) {
        const auto g = o.window;
        std::vector<std::string> parts;
        std::stringstream ss(g);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 4) throw InvalidInput("--window must be xmin:xmax:ymin:ymax");
        spec.window = Window{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]),
                             parse_double(parts[3])};
    }
    for (const auto& s : o.seeds) spec.seeds.push_back(parse_pair(s, ','));
    spec.include_shooting = !o.no_shooting;

    const PortraitBundle b = portrait_data(p, o.q_tilde, spec, o.controls);
    if (!o.svg.empty()) {
        std::ofstream f(o.svg, std::ios::binary);
        if (!f) throw InvalidInput("cannot open SVG file '" + o.svg + "'");
        write_portrait_svg(f, b);
    }
    const Format f = format_of(o);
    if (!o.out.empty() || f == Format::csv) {
        write_output(o, out, [&](std::ostream& os) { write_portrait_csv(os, b); });
    }
    if (o.out.empty() && f == Format::csv) return kExitOk;

    const auto connecting = std::count_if(b.orbits.begin(), b.orbits.end(),
                                          [](const PortraitOrbit& po) { return po.connecting; });
    Json rec{{"q_tilde", num(o.q_tilde)},
             {"coords", o.coords},
             {"field_samples", b.field.size()},
             {"orbits", b.orbits.size()},
             {"connecting_orbits", connecting},
             {"rest_points", Json::array()},
             {"singular_lines", Json::array()}};
    for (const auto& r : b.rest_points) rec["rest_points"].push_back(r.name + ":" + r.kind);
    for (const auto& l : b.singular_lines) rec["singular_lines"].push_back(num(l.speed));
    emit_record(rec, f == Format::json ? Format::json : Format::table, out);
    return kExitOk;
}

// ---------------------------------------------------------------- wiring

void add_params(CLI::App* sub, Options& o) {
    sub->add_option("--eta", o.eta, "viscosity coefficient eta > 0");
    sub->add_option("--mu", o.mu, "thermal regulator coefficient mu > 0");
    sub->add_option("--nu", o.nu, "velocity regulator coefficient nu > 0");
}

void add_q_tilde(CLI::App* sub, Options& o) {
    sub->add_option("--q-tilde", o.q_tilde, "shock amplitude parameter in (3/4, 1)");
}

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));
}

void add_out(CLI::App* sub, Options& o, const std::string& what) {
    sub->add_option("--out", o.out, what);
}

void add_controls(CLI::App* sub, Options& o) {
    auto& c = o.controls;
    sub->add_option("--rel-tol", c.rel_tol, "integrator relative tolerance");
    sub->add_option("--abs-tol", c.abs_tol, "integrator absolute tolerance");
    sub->add_option("--launch-offset", c.launch_offset, "relative offset of the launch point from psi_-");
    sub->add_option("--ball", c.convergence_ball, "relative radius of the convergence ball");
    sub->add_option("--max-steps", c.max_steps, "integrator step budget per orbit");
    sub->add_option("--max-arc-length", c.max_arc_length, "arc-length budget per orbit");
    sub->add_option("--convention", o.convention, "index convention of the profile system")
        ->check(CLI::IsMember({"contravariant", "covariant"}));
}

void add_threads(CLI::App* sub, Options& o) {
    sub->add_option("--threads", o.threads, "worker threads (0 = hardware concurrency, capped by SHOCKPROF_THREADS)");
}

// Config entries become tokens placed before the user's flags, so the
// take-last policy lets explicit flags win.
std::vector<std::string> config_tokens(const std::string& path, const CLI::App* sub) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot read config file '" + path + "'");
    Json cfg;
    try {
        cfg = Json::parse(f);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("config file is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw InvalidInput("config file must hold a JSON object");
    std::vector<std::string> tokens;
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        const std::string flag = "--" + it.key();
        if (it.key() == "config" || sub->get_option_no_throw(flag) == nullptr) continue;
        const Json& v = *it;
        if (v.is_boolean()) {
            if (v.get<bool>()) tokens.push_back(flag);
        } else if (v.is_array()) {
            for (const auto& e : v) {
                tokens.push_back(flag);
                tokens.push_back(e.is_string() ? e.get<std::string>() : e.dump());
            }
        } else {
            tokens.push_back(flag);
            tokens.push_back(v.is_string() ? v.get<std::string>() : scalar_text(v));
        }
    }
    return tokens;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Shock-profile existence toolkit for the viscous pure-radiation fluid", "shockprof"};
    app.option_defaults()->always_capture_default()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    auto* hug = app.add_subcommand("hugoniot", "shock states psi_-(q_tilde), psi_+(q_tilde) and Lax check");
    add_q_tilde(hug, o);

    auto* solve = app.add_subcommand("solve-q", "all states with T^{a1}(psi) = (q0, q1)");
    solve->add_option("--q0", o.q0, "flux target q0");
    solve->add_option("--q1", o.q1, "flux target q1");

    auto* caus = app.add_subcommand("causality", "characteristic speeds of the dissipation operator");
    add_params(caus, o);
    caus->add_option("--tol", o.luminal_tol, "tolerance for luminal detection");
    caus->add_flag("--adjudicate", o.adjudicate, "also evaluate the closed-form nu inequality and flag disagreement");

    auto* cls = app.add_subcommand("classify", "linearisation B^{-1} A at the rest points");
    add_params(cls, o);
    add_q_tilde(cls, o);
    cls->add_option("--which", o.which, "rest point: minus, plus or both");

    auto* prof = app.add_subcommand("profile", "decide whether the shock has a dissipation profile");
    add_params(prof, o);
    add_q_tilde(prof, o);
    add_controls(prof, o);

    auto* swp = app.add_subcommand("sweep", "profile verdicts over a q_tilde grid");
    add_params(swp, o);
    swp->add_option("--q-grid", o.q_grid, "q_tilde grid as min:max:count");
    add_controls(swp, o);
    add_threads(swp, o);

    auto* crit = app.add_subcommand("critical-q", "q_tilde where det B(psi_-) changes sign");
    add_params(crit, o);
    crit->add_option("--tol", o.critical_tol, "bisection tolerance in q_tilde");

    auto* reg = app.add_subcommand("region", "causality class and critical-amplitude map over (mu, nu)");
    reg->add_option("--eta", o.eta, "viscosity coefficient eta > 0");
    reg->add_option("--mu-grid", o.mu_grid, "mu grid as min:max:count");
    reg->add_option("--nu-grid", o.nu_grid, "nu grid as min:max:count");
    add_threads(reg, o);

    auto* por = app.add_subcommand("portrait", "phase-portrait data (CSV) and SVG rendering");
    add_params(por, o);
    add_q_tilde(por, o);
    add_controls(por, o);
    por->add_option("--coords", o.coords, "plot coordinates: psi or v-theta");
    por->add_option("--grid", o.grid, "field grid as NxM");
    por->add_option("--window", o.window, "plot window xmin:xmax:ymin:ymax (default: around the rest points)");
    por->add_option("--seed", o.seeds, "orbit seed x,y in plot coordinates (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    por->add_flag("--no-shooting", o.no_shooting, "omit the shooting orbits");
    por->add_option("--svg", o.svg, "write an SVG rendering to this path");

    for (auto* sub : {hug, solve, caus, cls, prof, swp, crit, reg, por}) {
        add_format(sub, o);
        sub->add_option("--config", o.config, "JSON file of flag values (flags given here take precedence)");
    }
    for (auto* sub : {hug, solve, caus, cls, crit, reg, swp}) {
        add_out(sub, o, "write results to this file instead of stdout");
    }
    add_out(prof, o, "write the connecting orbit as CSV to this file");
    add_out(por, o, "write portrait CSV to this file");

    try {
        std::vector<std::string> tokens = args;
        // Splice config values in right after the subcommand name.
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            if (tokens[i] == "--config" || tokens[i].rfind("--config=", 0) == 0) {
                const std::string path = tokens[i] == "--config" ? tokens[i + 1] : tokens[i].substr(9);
                const auto sub_it = std::find_if(tokens.begin(), tokens.end(), [&](const std::string& t) {
                    return app.get_subcommand_no_throw(t) != nullptr;
                });
                if (sub_it == tokens.end()) break;
                const auto extra = config_tokens(path, app.get_subcommand(*sub_it));
                tokens.insert(sub_it + 1, extra.begin(), extra.end());
                break;
            }
        }
        if (!tokens.empty() && tokens.back().rfind("--config=", 0) == 0) {
            const std::string path = tokens.back().substr(9);
            const auto sub_it = std::find_if(tokens.begin(), tokens.end(), [&](const std::string& t) {
                return app.get_subcommand_no_throw(t) != nullptr;
            });
            if (sub_it != tokens.end()) {
                const auto extra = config_tokens(path, app.get_subcommand(*sub_it));
                tokens.insert(sub_it + 1, extra.begin(), extra.end());
            }
        }
        std::reverse(tokens.begin(), tokens.end());
        app.parse(tokens);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    o.controls.convention =
        o.convention == "covariant" ? IndexConvention::covariant : IndexConvention::contravariant;
    try {
        if (hug->parsed()) return cmd_hugoniot(o, out);
        if (solve->parsed()) return cmd_solve_q(o, out);
        if (caus->parsed()) return cmd_causality(o, out);
        if (cls->parsed()) return cmd_classify(o, out);
        if (prof->parsed()) return cmd_profile(o, out, err);
        if (swp->parsed()) return cmd_sweep(o, out, err);
        if (crit->parsed()) return cmd_critical_q(o, out);
        if (reg->parsed()) return cmd_region(o, out);
        if (por->parsed()) return cmd_portrait(o, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NumericalFailure& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const DegenerateClassification& e) {
        err << "degenerate classification: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const SingularLinearization& e) {
        err << "singular linearisation: " << e.what() << '\n';
        return kExitNumerical;
    }
    err << "error: no subcommand\n";
    return kExitInvalidInput;
}

}  // namespace shockprof::cli
