// Command-line driver: simulate scenarios, emit the analytic report, compare
// finished runs against the closed-form steady state, measure 1D front
// speeds, and sweep a parameter for the equilibrium/stability table.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chemofront/analytic.hpp"
#include "chemofront/errors.hpp"
#include "chemofront/exec.hpp"
#include "chemofront/front.hpp"
#include "chemofront/params.hpp"
#include "chemofront/scenarios.hpp"
#include "chemofront/solver.hpp"

namespace cf = chemofront;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;

struct ModelFlags {
    std::optional<double> Du, Dv, lambda, beta, delta, chi0, u_star, v_star, A, omega;

    void attach(CLI::App& app) {
        app.add_option("--Du", Du, "diffusivity of u");
        app.add_option("--Dv", Dv, "diffusivity of v");
        app.add_option("--lambda", lambda, "reaction coefficient of u");
        app.add_option("--beta", beta, "reaction coefficient of v");
        app.add_option("--delta", delta, "chemical production rate");
        app.add_option("--chi0", chi0, "chemotactic sensitivity");
        app.add_option("--u-star", u_star, "unstable equilibrium of u");
        app.add_option("--v-star", v_star, "unstable equilibrium of v");
        app.add_option("--A", A, "initial Gaussian amplitude for v");
        app.add_option("--omega", omega, "initial Gaussian width for v");
    }

    void apply(cf::Parameters& p) const {
        if (Du) p.Du = *Du;
        if (Dv) p.Dv = *Dv;
        if (lambda) p.lambda = *lambda;
        if (beta) p.beta = *beta;
        if (delta) p.delta = *delta;
        if (chi0) p.chi0 = *chi0;
        if (u_star) p.u_star = *u_star;
        if (v_star) p.v_star = *v_star;
        if (A) p.A = *A;
        if (omega) p.omega = *omega;
    }
};

std::vector<double> parse_time_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

int cmd_run(const std::string& config_path, const std::string& scenario, int grid,
            double t_end, const std::string& out_dir, const std::string& snapshots,
            bool paper_scale, const ModelFlags& model, bool have_grid, bool have_t_end) {
    cf::RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "cannot open config " << config_path << "\n";
            return exit_usage;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        cfg = cf::parse_config(buf.str());
    }
    if (!scenario.empty()) {
        cfg.scenario = cf::scenario_from_string(scenario);
        cfg.params.Dv = cf::scenario_default_dv(cfg.scenario);
    }
    model.apply(cfg.params);
    if (paper_scale) {
        cfg.grid_n = 256;
        if (cfg.scenario == cf::ScenarioKind::T2 && !have_t_end) cfg.t_end = 170.0;
    }
    if (have_grid) cfg.grid_n = grid;
    if (have_t_end) cfg.t_end = t_end;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (!snapshots.empty()) cfg.snapshot_times = parse_time_list(snapshots);

    // Re-validate through the canonical path so CLI overrides obey the same
    // guard as config files.
    cfg = cf::parse_config(cf::serialize_config(cfg));

    const cf::StateSnapshot ic = cf::build_initial_condition(cfg.scenario, cfg.grid_n);
    const cf::RunManifest m = cf::run(cfg, ic);
    std::cout << "run complete: " << m.steps_total << " steps, "
              << m.snapshots.size() << " snapshots, manifest at "
              << (std::filesystem::path(m.output_dir) / "manifest.txt").string() << "\n";
    return exit_ok;
}

int cmd_analytic(const ModelFlags& model, const std::string& out_path) {
    cf::Parameters p;
    model.apply(p);
    if (out_path.empty()) {
        cf::write_analytic_report(std::cout, p);
    } else {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "cannot open " << out_path << "\n";
            return exit_usage;
        }
        cf::write_analytic_report(os, p);
    }
    return exit_ok;
}

int cmd_compare(const std::string& run_dir, const std::string& out_dir) {
    const cf::RunManifest m =
        cf::read_manifest(std::filesystem::path(run_dir) / "manifest.txt");
    const double R1 = cf::plateau_radius(m.params.A, m.params.omega, m.params.v_star);
    const cf::AnalyticSteadyState s = cf::chemical_constants(R1, m.params.delta);
    const cf::EquilibriumResult eq = cf::equilibrium_radius(m.params, s);

    const cf::ComparisonReport report = cf::compare_to_analytic(m, s, eq.primary);

    const std::filesystem::path out(out_dir.empty() ? run_dir : out_dir);
    std::filesystem::create_directories(out);
    {
        std::ofstream os(out / "report.csv");
        cf::write_report_csv(os, report);
    }
    for (std::size_t k = 0; k < report.front_contours.size(); ++k) {
        std::ofstream os(out / ("contour_front_" + std::to_string(k) + ".csv"));
        cf::write_contour_csv(os, report.front_contours[k]);
    }
    for (std::size_t k = 0; k < report.plateau_contours.size(); ++k) {
        std::ofstream os(out / ("contour_plateau_" + std::to_string(k) + ".csv"));
        cf::write_contour_csv(os, report.plateau_contours[k]);
    }
    cf::write_report_csv(std::cout, report);
    return exit_ok;
}

int cmd_speed1d(const ModelFlags& model, double delta_c, double length, int n,
                double t_measure) {
    cf::Parameters p;
    model.apply(p);
    const cf::SpeedMeasurement m = cf::front_speed_1d(p, length, n, t_measure, delta_c);
    std::printf("speed = %.6f\nfit_residual = %.3e\nu1 = %.6f\nu2 = %.6f\n", m.speed,
                m.fit_residual, m.u1, m.u2);
    return exit_ok;
}

int cmd_sweep(const ModelFlags& model, const std::string& param, double from, double to,
              int steps, const std::string& out_path) {
    cf::Parameters base;
    model.apply(base);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return exit_usage;
        }
        os = &file;
    }
    os->precision(12);
    *os << param << ",R1,R0,radial_rate,stable,status\n";
    for (int k = 0; k <= steps; ++k) {
        const double value = from + (to - from) * k / std::max(1, steps);
        cf::Parameters p = base;
        if (param == "Du") p.Du = value;
        else if (param == "Dv") p.Dv = value;
        else if (param == "lambda") p.lambda = value;
        else if (param == "beta") p.beta = value;
        else if (param == "delta") p.delta = value;
        else if (param == "chi0") p.chi0 = value;
        else if (param == "u_star") p.u_star = value;
        else if (param == "v_star") p.v_star = value;
        else if (param == "A") p.A = value;
        else if (param == "omega") p.omega = value;
        else {
            std::cerr << "unknown sweep parameter '" << param << "'\n";
            return exit_usage;
        }
        try {
            const double R1 = cf::plateau_radius(p.A, p.omega, p.v_star);
            const cf::AnalyticSteadyState s = cf::chemical_constants(R1, p.delta);
            const cf::EquilibriumResult eq = cf::equilibrium_radius(p, s);
            *os << value << "," << R1 << "," << eq.primary.R0 << ","
                << eq.primary.radial_rate << "," << (eq.primary.stable ? 1 : 0) << ","
                << (eq.ambiguous ? "ambiguous" : "ok") << "\n";
        } catch (const cf::no_plateau&) {
            *os << value << ",,,,," << "no_plateau" << "\n";
        } catch (const cf::no_equilibrium&) {
            *os << value << ",,,,," << "no_equilibrium" << "\n";
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chemo-repellent front laboratory"};
    app.require_subcommand(1);

    int threads = cf::exec::threads();
    app.add_option("--threads", threads, "worker threads for the stepper");

    // run
    auto* run = app.add_subcommand("run", "integrate a scenario and persist snapshots");
    std::string config_path, scenario, out_dir, snapshots;
    int grid = 128;
    double t_end = 9.8039;
    bool paper_scale = false;
    ModelFlags run_model;
    run->add_option("--config", config_path, "config file (INI-style)");
    run->add_option("--scenario", scenario, "t1, t2, t3");
    auto* grid_opt = run->add_option("--grid", grid, "nodes per side");
    auto* tend_opt = run->add_option("--t-end", t_end, "final non-dimensional time");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--snapshots", snapshots, "comma-separated snapshot times");
    run->add_flag("--paper-scale", paper_scale, "full-resolution long job (n = 256)");
    run_model.attach(*run);

    // analytic
    auto* analytic = app.add_subcommand("analytic", "emit the closed-form report as CSV");
    std::string analytic_out;
    ModelFlags analytic_model;
    analytic_model.attach(*analytic);
    analytic->add_option("--out", analytic_out, "write CSV here instead of stdout");

    // compare
    auto* compare = app.add_subcommand("compare", "compare a finished run to the analytics");
    std::string compare_run, compare_out;
    compare->add_option("--run", compare_run, "run directory containing manifest.txt")
        ->required();
    compare->add_option("--out", compare_out, "directory for report.csv and contours");

    // speed1d
    auto* speed = app.add_subcommand("speed1d", "measure the 1D bistable front speed");
    double delta_c = 0.0, length = 16.0, t_measure = 12.0;
    int n1d = 4001;
    ModelFlags speed_model;
    speed_model.attach(*speed);
    speed->add_option("--delta-c", delta_c, "constant Laplacian shift");
    speed->add_option("--length", length, "1D domain length");
    speed->add_option("--n", n1d, "1D grid nodes");
    speed->add_option("--t-measure", t_measure, "measurement horizon");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "equilibrium/stability table over one parameter");
    std::string sweep_param, sweep_out;
    double sweep_from = 0.0, sweep_to = 1.0;
    int sweep_steps = 10;
    ModelFlags sweep_model;
    sweep_model.attach(*sweep);
    sweep->add_option("--param", sweep_param, "parameter name")->required();
    sweep->add_option("--from", sweep_from, "start value")->required();
    sweep->add_option("--to", sweep_to, "end value")->required();
    sweep->add_option("--steps", sweep_steps, "number of intervals");
    sweep->add_option("--out", sweep_out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    cf::exec::set_threads(threads);

    try {
        if (run->parsed()) {
            return cmd_run(config_path, scenario, grid, t_end, out_dir, snapshots, paper_scale,
                           run_model, grid_opt->count() > 0, tend_opt->count() > 0);
        }
        if (analytic->parsed()) return cmd_analytic(analytic_model, analytic_out);
        if (compare->parsed()) return cmd_compare(compare_run, compare_out);
        if (speed->parsed()) return cmd_speed1d(speed_model, delta_c, length, n1d, t_measure);
        if (sweep->parsed()) {
            return cmd_sweep(sweep_model, sweep_param, sweep_from, sweep_to, sweep_steps,
                             sweep_out);
        }
    } catch (const cf::blow_up& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const cf::no_equilibrium& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const cf::no_plateau& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const cf::complex_roots& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const cf::no_contour& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const cf::window_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
