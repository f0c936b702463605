#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "chemofront/field.hpp"
#include "chemofront/params.hpp"

namespace chemofront {

/// Explicit Euler stepper for the three-field system. The update is fully
/// simultaneous: all right-hand sides read the pre-step fields. Construction
/// enforces the Courant guard dt * (1/2) / dx^2 <= 1/4 (the chemical equation
/// is the stiffest term).
class Stepper {
public:
    Stepper(StateSnapshot ic, Parameters params, double dt);

    void step();
    void advance(long nsteps);

    const StateSnapshot& state() const { return state_; }
    const Parameters& params() const { return params_; }
    long step_count() const { return step_count_; }
    double dt() const { return dt_; }
    /// t = step_count * dt, formed by multiplication so reruns agree bitwise.
    double time() const { return step_count_ * dt_; }

    /// Steps between exhaustive finiteness scans; a single mid row of each
    /// field is checked every step.
    static constexpr long full_check_interval = 1000;

private:
    void check_finite(bool full);

    StateSnapshot state_;
    Parameters params_;
    double dt_;
    long step_count_ = 0;
    Field next_u_, next_v_, next_c_;
};

struct SnapshotRecord {
    std::string file;
    double t_target;
    double t_achieved;
    double u_min, u_max, v_min, v_max, c_min, c_max;
};

struct RunManifest {
    ScenarioKind scenario = ScenarioKind::Custom;
    Parameters params;
    int grid_n = 0;
    double dt_factor = 0.0, dt = 0.0, dx = 0.0, t_end = 0.0;
    CrossSectionSpec cross_section;
    std::uint64_t config_hash = 0;
    long steps_total = 0;
    std::string status;  ///< "completed" or "blow_up"
    std::vector<SnapshotRecord> snapshots;
    std::string output_dir;
    double wall_time_s = 0.0;  ///< informational; excluded from reproducibility
};

/// Pathname of the snapshot persisted for a target time.
std::string snapshot_filename(ScenarioKind scenario, double t_target);

void write_manifest(const RunManifest& m, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

/// Integrates ic to config.t_end, persisting a snapshot at the last step not
/// exceeding each requested time (the final time is always included), and
/// writes manifest.txt into config.output_dir. On blow-up the partial
/// manifest is written before the error propagates.
RunManifest run(const RunConfig& config, const StateSnapshot& ic);

struct SpeedMeasurement {
    double speed;
    double fit_residual;  ///< RMS residual of the linear fit
    double u1, u2;        ///< equilibria actually used
};

/// Measures the 1D front speed of u_t = Du u_xx + lambda u (u1-u)(u-u2) on
/// [0, domain_length] with Neumann ends, from a step initial condition
/// (u = u1 on the left half). The speed is the least-squares slope of the
/// (u1+u2)/2 crossing position over [t_measure/2, t_measure]. u1, u2 come
/// from the exact shifted equilibria at the supplied constant delta_c.
/// Throws window_error if the front nears a boundary inside the window.
SpeedMeasurement front_speed_1d(const Parameters& p, double domain_length, int n,
                                double t_measure, double delta_c = 0.0);

}  // namespace chemofront
