#include "chemofront/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "chemofront/errors.hpp"

namespace chemofront {

std::string to_string(ScenarioKind s) {
    switch (s) {
        case ScenarioKind::T1: return "t1";
        case ScenarioKind::T2: return "t2";
        case ScenarioKind::T3: return "t3";
        case ScenarioKind::Custom: return "custom";
    }
    return "custom";
}

ScenarioKind scenario_from_string(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "t1") return ScenarioKind::T1;
    if (lower == "t2") return ScenarioKind::T2;
    if (lower == "t3") return ScenarioKind::T3;
    if (lower == "custom") return ScenarioKind::Custom;
    throw std::invalid_argument("unknown scenario '" + std::string(s) + "'");
}

double scenario_default_dv(ScenarioKind s) {
    switch (s) {
        case ScenarioKind::T1: return 0.0;
        case ScenarioKind::T2: return 1e-5;
        case ScenarioKind::T3: return 0.0;
        case ScenarioKind::Custom: return 1e-5;
    }
    return 1e-5;
}

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0)) {
        throw invalid_parameter(field, std::string(field) + " must be positive, got " +
                                           std::to_string(value));
    }
}

}  // namespace

Parameters nondimensionalize(const DimensionalParameters& d) {
    require_positive(d.Du_dim, "Du_dim");
    require_positive(d.Dv_dim, "Dv_dim");
    require_positive(d.Dc_dim, "Dc_dim");
    require_positive(d.lambda_dim, "lambda_dim");
    require_positive(d.beta_dim, "beta_dim");
    require_positive(d.delta_dim, "delta_dim");
    require_positive(d.alpha_dim, "alpha_dim");
    require_positive(d.chi0_dim, "chi0_dim");
    require_positive(d.u0, "u0");
    require_positive(d.v0, "v0");
    require_positive(d.c0, "c0");
    require_positive(d.u_star_dim, "u_star_dim");
    require_positive(d.v_star_dim, "v_star_dim");
    require_positive(d.L, "L");
    if (!(d.u_star_dim < d.u0)) {
        throw invalid_parameter("u_star_dim", "u_star_dim must lie below u0");
    }
    if (!(d.v_star_dim < d.v0)) {
        throw invalid_parameter("v_star_dim", "v_star_dim must lie below v0");
    }

    Parameters p;
    p.Du = d.Du_dim / (2.0 * d.Dc_dim);
    p.Dv = d.Dv_dim / (2.0 * d.Dc_dim);
    p.lambda = d.lambda_dim * d.u0 * d.u0 / d.alpha_dim;
    p.beta = d.beta_dim * d.v0 * d.v0 / d.alpha_dim;
    p.delta = d.delta_dim * d.v0 / (d.c0 * d.alpha_dim);
    p.chi0 = d.chi0_dim * d.c0 / (2.0 * d.Dc_dim);
    p.u_star = d.u_star_dim / d.u0;
    p.v_star = d.v_star_dim / d.v0;
    return p;
}

bool plateau_condition_holds(double A, double omega, double v_star) {
    const double ratio = A / v_star;
    return ratio > 1.0 && ratio < std::exp(omega / std::numbers::pi);
}

std::vector<std::string> validate(const Parameters& p) {
    std::vector<std::string> out;
    auto positive = [&](double v, const char* name) {
        if (!(v > 0.0)) out.push_back(std::string(name) + " must be positive (got " +
                                      std::to_string(v) + ")");
    };
    positive(p.Du, "Du");
    if (!(p.Dv >= 0.0)) out.push_back("Dv must be non-negative (got " + std::to_string(p.Dv) + ")");
    positive(p.lambda, "lambda");
    positive(p.beta, "beta");
    positive(p.delta, "delta");
    positive(p.chi0, "chi0");
    if (!(p.u_star > 0.0 && p.u_star < 1.0)) {
        out.push_back("u_star not in (0,1) (got " + std::to_string(p.u_star) + ")");
    }
    if (!(p.v_star > 0.0 && p.v_star < 1.0)) {
        out.push_back("v_star not in (0,1) (got " + std::to_string(p.v_star) + ")");
    }
    positive(p.A, "A");
    positive(p.omega, "omega");
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view v, int line) {
    const std::string tmp(v);
    char* end = nullptr;
    const double d = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size() || tmp.empty()) {
        throw parse_error(line, "expected a number, got '" + tmp + "'");
    }
    return d;
}

int parse_int(std::string_view v, int line) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw parse_error(line, "expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view v, int line) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        const std::size_t comma = v.find(',', pos);
        const std::string_view item =
            trim(v.substr(pos, comma == std::string_view::npos ? v.size() - pos : comma - pos));
        if (!item.empty()) out.push_back(parse_double(item, line));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::optional<double> dv_explicit;
    std::string section;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw parse_error(line_no, "unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "model" && section != "grid" && section != "run" &&
                section != "output") {
                throw parse_error(line_no, "unknown section '" + section + "'");
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw parse_error(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) throw parse_error(line_no, "empty key");

        if (section == "model") {
            if (key == "Du") cfg.params.Du = parse_double(value, line_no);
            else if (key == "Dv") dv_explicit = parse_double(value, line_no);
            else if (key == "lambda") cfg.params.lambda = parse_double(value, line_no);
            else if (key == "beta") cfg.params.beta = parse_double(value, line_no);
            else if (key == "delta") cfg.params.delta = parse_double(value, line_no);
            else if (key == "chi0") cfg.params.chi0 = parse_double(value, line_no);
            else if (key == "u_star") cfg.params.u_star = parse_double(value, line_no);
            else if (key == "v_star") cfg.params.v_star = parse_double(value, line_no);
            else if (key == "A") cfg.params.A = parse_double(value, line_no);
            else if (key == "omega") cfg.params.omega = parse_double(value, line_no);
            else throw parse_error(line_no, "unknown key '" + key + "' in [model]");
        } else if (section == "grid") {
            if (key == "n") cfg.grid_n = parse_int(value, line_no);
            else throw parse_error(line_no, "unknown key '" + key + "' in [grid]");
        } else if (section == "run") {
            if (key == "dt_factor") cfg.dt_factor = parse_double(value, line_no);
            else if (key == "t_end") cfg.t_end = parse_double(value, line_no);
            else if (key == "snapshot_times") cfg.snapshot_times = parse_double_list(value, line_no);
            else if (key == "scenario") {
                try {
                    cfg.scenario = scenario_from_string(value);
                } catch (const std::invalid_argument& e) {
                    throw parse_error(line_no, e.what());
                }
            } else throw parse_error(line_no, "unknown key '" + key + "' in [run]");
        } else if (section == "output") {
            if (key == "dir") cfg.output_dir = std::string(value);
            else if (key == "cross_section_axis") {
                if (value == "x") cfg.cross_section.axis = Axis::X;
                else if (value == "y") cfg.cross_section.axis = Axis::Y;
                else throw parse_error(line_no, "cross_section_axis must be x or y");
            } else if (key == "cross_section_offset") {
                cfg.cross_section.offset = parse_double(value, line_no);
            } else throw parse_error(line_no, "unknown key '" + key + "' in [output]");
        } else {
            throw parse_error(line_no, "key '" + key + "' outside any section");
        }
    }

    cfg.params.Dv = dv_explicit ? *dv_explicit : scenario_default_dv(cfg.scenario);

    if (auto violations = validate(cfg.params); !violations.empty()) {
        throw config_rejected("invalid parameters: " + violations.front());
    }
    if (cfg.grid_n < 16) {
        throw config_rejected("grid_n must be at least 16, got " + std::to_string(cfg.grid_n));
    }
    if (!(cfg.t_end >= 0.0)) {
        throw config_rejected("t_end must be non-negative");
    }
    if (!(cfg.dt_factor > 0.0)) {
        throw config_rejected("dt_factor must be positive");
    }
    // Courant guard against the stiffest diffusivity, the chemical's 1/2.
    if (cfg.courant() * 0.5 > 0.25) {
        throw config_rejected("Courant number " + fmt(cfg.courant()) +
                              " violates dt/(2 dx^2) <= 1/4; reduce dt_factor");
    }
    for (double t : cfg.snapshot_times) {
        if (t < 0.0 || t > cfg.t_end) {
            throw config_rejected("snapshot time " + fmt(t) + " outside [0, t_end]");
        }
    }
    for (std::size_t i = 0; i + 1 < cfg.snapshot_times.size(); ++i) {
        if (cfg.snapshot_times[i + 1] < cfg.snapshot_times[i]) {
            throw config_rejected("snapshot_times must be non-decreasing");
        }
    }
    if (cfg.cross_section.offset < 0.0 || cfg.cross_section.offset > 1.0) {
        throw config_rejected("cross_section_offset outside [0,1]");
    }
    return cfg;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    os << "[model]\n";
    os << "Du = " << fmt(c.params.Du) << "\n";
    os << "Dv = " << fmt(c.params.Dv) << "\n";
    os << "lambda = " << fmt(c.params.lambda) << "\n";
    os << "beta = " << fmt(c.params.beta) << "\n";
    os << "delta = " << fmt(c.params.delta) << "\n";
    os << "chi0 = " << fmt(c.params.chi0) << "\n";
    os << "u_star = " << fmt(c.params.u_star) << "\n";
    os << "v_star = " << fmt(c.params.v_star) << "\n";
    os << "A = " << fmt(c.params.A) << "\n";
    os << "omega = " << fmt(c.params.omega) << "\n";
    os << "[grid]\n";
    os << "n = " << c.grid_n << "\n";
    os << "[run]\n";
    os << "dt_factor = " << fmt(c.dt_factor) << "\n";
    os << "t_end = " << fmt(c.t_end) << "\n";
    if (!c.snapshot_times.empty()) {
        os << "snapshot_times = ";
        for (std::size_t i = 0; i < c.snapshot_times.size(); ++i) {
            if (i) os << ", ";
            os << fmt(c.snapshot_times[i]);
        }
        os << "\n";
    }
    os << "scenario = " << to_string(c.scenario) << "\n";
    os << "[output]\n";
    os << "dir = " << c.output_dir << "\n";
    os << "cross_section_axis = " << (c.cross_section.axis == Axis::X ? "x" : "y") << "\n";
    os << "cross_section_offset = " << fmt(c.cross_section.offset) << "\n";
    return os.str();
}

std::uint64_t config_hash(const RunConfig& c) {
    const std::string text = serialize_config(c);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace chemofront
