#include "chemofront/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "chemofront/analytic.hpp"
#include "chemofront/errors.hpp"
#include "chemofront/exec.hpp"
#include "chemofront/operators.hpp"

namespace chemofront {

Stepper::Stepper(StateSnapshot ic, Parameters params, double dt)
    : state_(std::move(ic)),
      params_(params),
      dt_(dt),
      next_u_(state_.u.n()),
      next_v_(state_.u.n()),
      next_c_(state_.u.n()) {
    const double dx = state_.u.dx();
    if (!(dt > 0.0)) throw config_rejected("Stepper: dt must be positive");
    if (dt * 0.5 / (dx * dx) > 0.25) {
        throw config_rejected("Stepper: dt violates the Courant guard dt/(2 dx^2) <= 1/4");
    }
    if (auto bad = validate(params_); !bad.empty()) {
        throw config_rejected("Stepper: " + bad.front());
    }
    if (!state_.u.all_finite() || !state_.v.all_finite() || !state_.c.all_finite()) {
        throw blow_up(0, 0, 0, "initial condition");
    }
}

void Stepper::step() {
    const int n = state_.u.n();
    const Field& u = state_.u;
    const Field& v = state_.v;
    const Field& c = state_.c;
    Field& un = next_u_;
    Field& vn = next_v_;
    Field& cn = next_c_;
    const double dt = dt_;
    const Parameters& P = params_;
    const bool diffuse_v = P.Dv > 0.0;

    exec::parallel_rows(n, [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            for (int i = 0; i < n; ++i) {
                const double uu = u(i, j);
                const double vv = v(i, j);
                const double cc = c(i, j);
                un(i, j) = uu + dt * (P.Du * stencil::lap5(u, i, j) +
                                      P.lambda * uu * (1.0 - uu) * (uu - P.u_star) +
                                      stencil::chem_div(u, c, P.chi0, i, j));
                const double rv = P.beta * vv * (1.0 - vv) * (vv - P.v_star);
                vn(i, j) = diffuse_v ? vv + dt * (P.Dv * stencil::lap5(v, i, j) + rv)
                                     : vv + dt * rv;
                cn(i, j) = cc + dt * (0.5 * stencil::lap5(c, i, j) + P.delta * vv - cc);
            }
        }
    });

    std::swap(state_.u, next_u_);
    std::swap(state_.v, next_v_);
    std::swap(state_.c, next_c_);
    ++step_count_;
    state_.t = step_count_ * dt_;

    check_finite(step_count_ % full_check_interval == 0);
}

void Stepper::check_finite(bool full) {
    const int n = state_.u.n();
    const Field* fields[3] = {&state_.u, &state_.v, &state_.c};
    const char* names[3] = {"u", "v", "c"};
    if (full) {
        for (int f = 0; f < 3; ++f) {
            const std::ptrdiff_t k = fields[f]->first_non_finite();
            if (k >= 0) {
                throw blow_up(step_count_, static_cast<int>(k % n), static_cast<int>(k / n),
                              names[f]);
            }
        }
        return;
    }
    const int j = n / 2;
    for (int f = 0; f < 3; ++f) {
        for (int i = 0; i < n; ++i) {
            if (!std::isfinite((*fields[f])(i, j))) {
                throw blow_up(step_count_, i, j, names[f]);
            }
        }
    }
}

void Stepper::advance(long nsteps) {
    for (long k = 0; k < nsteps; ++k) step();
}

std::string snapshot_filename(ScenarioKind scenario, double t_target) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s_t%.4f.cfld", to_string(scenario).c_str(), t_target);
    return buf;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

SnapshotRecord persist_snapshot(const StateSnapshot& s, ScenarioKind scenario, double t_target,
                                const std::filesystem::path& dir) {
    SnapshotRecord rec;
    rec.file = snapshot_filename(scenario, t_target);
    rec.t_target = t_target;
    rec.t_achieved = s.t;
    rec.u_min = s.u.min();
    rec.u_max = s.u.max();
    rec.v_min = s.v.min();
    rec.v_max = s.v.max();
    rec.c_min = s.c.min();
    rec.c_max = s.c.max();
    save_snapshot(s, dir / rec.file);
    return rec;
}

}  // namespace

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << "format = chemofront-run-1\n";
    os << "status = " << m.status << "\n";
    os << "scenario = " << to_string(m.scenario) << "\n";
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(m.config_hash));
    os << "config_hash = " << hash << "\n";
    os << "grid_n = " << m.grid_n << "\n";
    os << "dt_factor = " << fmt(m.dt_factor) << "\n";
    os << "dt = " << fmt(m.dt) << "\n";
    os << "dx = " << fmt(m.dx) << "\n";
    os << "t_end = " << fmt(m.t_end) << "\n";
    os << "Du = " << fmt(m.params.Du) << "\n";
    os << "Dv = " << fmt(m.params.Dv) << "\n";
    os << "lambda = " << fmt(m.params.lambda) << "\n";
    os << "beta = " << fmt(m.params.beta) << "\n";
    os << "delta = " << fmt(m.params.delta) << "\n";
    os << "chi0 = " << fmt(m.params.chi0) << "\n";
    os << "u_star = " << fmt(m.params.u_star) << "\n";
    os << "v_star = " << fmt(m.params.v_star) << "\n";
    os << "A = " << fmt(m.params.A) << "\n";
    os << "omega = " << fmt(m.params.omega) << "\n";
    os << "cross_section_axis = " << (m.cross_section.axis == Axis::X ? "x" : "y") << "\n";
    os << "cross_section_offset = " << fmt(m.cross_section.offset) << "\n";
    os << "steps_total = " << m.steps_total << "\n";
    os << "snapshots = " << m.snapshots.size() << "\n";
    for (std::size_t k = 0; k < m.snapshots.size(); ++k) {
        const SnapshotRecord& r = m.snapshots[k];
        const std::string p = "snapshot_" + std::to_string(k) + "_";
        os << p << "file = " << r.file << "\n";
        os << p << "t_target = " << fmt(r.t_target) << "\n";
        os << p << "t = " << fmt(r.t_achieved) << "\n";
        os << p << "u_min = " << fmt(r.u_min) << "\n";
        os << p << "u_max = " << fmt(r.u_max) << "\n";
        os << p << "v_min = " << fmt(r.v_min) << "\n";
        os << p << "v_max = " << fmt(r.v_max) << "\n";
        os << p << "c_min = " << fmt(r.c_min) << "\n";
        os << p << "c_max = " << fmt(r.c_max) << "\n";
    }
    // Informational only; reproducibility comparisons must ignore this line.
    os << "wall_time_s = " << fmt(m.wall_time_s) << "\n";
    os.flush();
    if (!os) throw std::runtime_error("write failed for " + path.string());
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto strip = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::runtime_error("manifest missing key '" + key + "'");
        return it->second;
    };

    RunManifest m;
    m.status = need("status");
    m.scenario = scenario_from_string(need("scenario"));
    m.config_hash = std::stoull(need("config_hash"), nullptr, 16);
    m.grid_n = std::stoi(need("grid_n"));
    m.dt_factor = std::stod(need("dt_factor"));
    m.dt = std::stod(need("dt"));
    m.dx = std::stod(need("dx"));
    m.t_end = std::stod(need("t_end"));
    m.params.Du = std::stod(need("Du"));
    m.params.Dv = std::stod(need("Dv"));
    m.params.lambda = std::stod(need("lambda"));
    m.params.beta = std::stod(need("beta"));
    m.params.delta = std::stod(need("delta"));
    m.params.chi0 = std::stod(need("chi0"));
    m.params.u_star = std::stod(need("u_star"));
    m.params.v_star = std::stod(need("v_star"));
    m.params.A = std::stod(need("A"));
    m.params.omega = std::stod(need("omega"));
    m.cross_section.axis = need("cross_section_axis") == "y" ? Axis::Y : Axis::X;
    m.cross_section.offset = std::stod(need("cross_section_offset"));
    m.steps_total = std::stol(need("steps_total"));
    m.wall_time_s = kv.count("wall_time_s") ? std::stod(kv["wall_time_s"]) : 0.0;
    const int count = std::stoi(need("snapshots"));
    for (int k = 0; k < count; ++k) {
        const std::string p = "snapshot_" + std::to_string(k) + "_";
        SnapshotRecord r;
        r.file = need(p + "file");
        r.t_target = std::stod(need(p + "t_target"));
        r.t_achieved = std::stod(need(p + "t"));
        r.u_min = std::stod(need(p + "u_min"));
        r.u_max = std::stod(need(p + "u_max"));
        r.v_min = std::stod(need(p + "v_min"));
        r.v_max = std::stod(need(p + "v_max"));
        r.c_min = std::stod(need(p + "c_min"));
        r.c_max = std::stod(need(p + "c_max"));
        m.snapshots.push_back(std::move(r));
    }
    m.output_dir = path.parent_path().string();
    return m;
}

RunManifest run(const RunConfig& config, const StateSnapshot& ic) {
    if (ic.u.n() != config.grid_n) {
        throw config_rejected("run: initial condition grid does not match config");
    }
    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);

    const double dt = config.dt();
    const long total_steps = static_cast<long>(std::floor(config.t_end / dt + 1e-9));

    // Snapshot targets: requested times plus the final time, each persisted at
    // the last step not exceeding the target.
    std::vector<double> targets = config.snapshot_times;
    targets.push_back(config.t_end);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    RunManifest m;
    m.scenario = config.scenario;
    m.params = config.params;
    m.grid_n = config.grid_n;
    m.dt_factor = config.dt_factor;
    m.dt = dt;
    m.dx = config.dx();
    m.t_end = config.t_end;
    m.cross_section = config.cross_section;
    m.config_hash = config_hash(config);
    m.steps_total = total_steps;
    m.status = "completed";
    m.output_dir = dir.string();

    const auto t0 = std::chrono::steady_clock::now();
    Stepper stepper(ic, config.params, dt);
    try {
        for (double target : targets) {
            const long k = std::min(total_steps,
                                    static_cast<long>(std::floor(target / dt + 1e-9)));
            stepper.advance(k - stepper.step_count());
            m.snapshots.push_back(
                persist_snapshot(stepper.state(), config.scenario, target, dir));
        }
        stepper.advance(total_steps - stepper.step_count());
    } catch (const blow_up&) {
        m.status = "blow_up";
        m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_manifest(m, dir / "manifest.txt");
        throw;
    }
    m.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(m, dir / "manifest.txt");
    return m;
}

SpeedMeasurement front_speed_1d(const Parameters& p, double domain_length, int n,
                                double t_measure, double delta_c) {
    if (n < 16) throw std::invalid_argument("front_speed_1d: n too small");
    if (!(domain_length > 0.0) || !(t_measure > 0.0)) {
        throw std::invalid_argument("front_speed_1d: bad domain or window");
    }
    const double dx = domain_length / (n - 1);
    double dt = 0.25 * dx * dx / p.Du;
    dt = std::min(dt, 0.1 / p.lambda);

    const auto eq = shifted_equilibria(delta_c, p.lambda, p.chi0, p.u_star);
    const double u1 = eq.u1, u2 = eq.u2;
    const double level = 0.5 * (u1 + u2);

    std::vector<double> u(n), un(n);
    for (int i = 0; i < n; ++i) u[i] = (i * dx < 0.5 * domain_length) ? u1 : 0.0;

    const long steps = static_cast<long>(std::ceil(t_measure / dt));
    const long sample_every = std::max<long>(1, steps / 400);
    const double inv_dx2 = 1.0 / (dx * dx);

    std::vector<std::pair<double, double>> pts;
    for (long k = 0; k <= steps; ++k) {
        const double t = k * dt;
        if (k % sample_every == 0 && t >= 0.5 * t_measure) {
            int idx = -1;
            for (int i = 0; i + 1 < n; ++i) {
                if (u[i] >= level && u[i + 1] < level) {
                    idx = i;
                    break;
                }
            }
            if (idx < 0) throw window_error("front_speed_1d: no level crossing in the domain");
            const double xc = (idx + (level - u[idx]) / (u[idx + 1] - u[idx])) * dx;
            if (xc < 0.05 * domain_length || xc > 0.95 * domain_length) {
                throw window_error("front_speed_1d: front reached the boundary inside the "
                                   "measurement window");
            }
            pts.emplace_back(t, xc);
        }
        if (k == steps) break;
        for (int i = 0; i < n; ++i) {
            const double left = u[i > 0 ? i - 1 : 1];
            const double right = u[i < n - 1 ? i + 1 : n - 2];
            const double lap = (left + right - 2.0 * u[i]) * inv_dx2;
            un[i] = u[i] + dt * (p.Du * lap + p.lambda * u[i] * (u1 - u[i]) * (u[i] - u2));
        }
        std::swap(u, un);
    }

    // Least-squares slope of crossing position vs time.
    const double np = static_cast<double>(pts.size());
    double st = 0, sx = 0;
    for (auto& [t, x] : pts) {
        st += t;
        sx += x;
    }
    const double mt = st / np, mx = sx / np;
    double cov = 0, var = 0;
    for (auto& [t, x] : pts) {
        cov += (t - mt) * (x - mx);
        var += (t - mt) * (t - mt);
    }
    const double slope = cov / var;
    double ss = 0;
    for (auto& [t, x] : pts) {
        const double r = x - (mx + slope * (t - mt));
        ss += r * r;
    }
    return {slope, std::sqrt(ss / np), u1, u2};
}

}  // namespace chemofront
