#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace chemofront {

/// Radius of the circle with unit area, the analytic dish boundary.
inline constexpr double dish_radius = std::numbers::inv_sqrtpi;

/// Raw dimensional inputs. Units are documented per field; values are plain
/// doubles, no unit system is enforced.
struct DimensionalParameters {
    double Du_dim;      ///< diffusivity of u, length^2/time
    double Dv_dim;      ///< diffusivity of v, length^2/time
    double Dc_dim;      ///< diffusivity of the chemical, length^2/time
    double lambda_dim;  ///< reaction rate of u, 1/(concentration^2 * time)
    double beta_dim;    ///< reaction rate of v, 1/(concentration^2 * time)
    double delta_dim;   ///< chemical production, chem-conc/(cell-conc * time)
    double alpha_dim;   ///< chemical decay, 1/time
    double chi0_dim;    ///< chemotactic sensitivity, length^2/(time * chem-conc)
    double u0, v0, c0;  ///< carrying / reference concentrations
    double u_star_dim;  ///< unstable threshold of u, in (0, u0)
    double v_star_dim;  ///< unstable threshold of v, in (0, v0)
    double L;           ///< dish length
};

/// Non-dimensional model parameters. Defaults are the standard computation
/// set; A and omega shape the initial Gaussian for v and feed the analytic
/// plateau radius, so they live here rather than with the initial data.
struct Parameters {
    double Du = 0.01;
    double Dv = 1e-5;
    double lambda = 60.0;
    double beta = 8.0;
    double delta = 10.0;
    double chi0 = 3.2;
    double u_star = 0.2;
    double v_star = 0.5;
    double A = 3.0;
    double omega = 1000.0;

    bool operator==(const Parameters&) const = default;
};

enum class ScenarioKind { T1, T2, T3, Custom };

std::string to_string(ScenarioKind s);
ScenarioKind scenario_from_string(std::string_view s);

/// Default Dv when the config does not set one explicitly: T1 and T3 run the
/// zero-diffusion bacteria, T2 the small-diffusion one.
double scenario_default_dv(ScenarioKind s);

enum class Axis { X, Y };

/// A grid line for profile extraction: the profile runs along `axis` at the
/// fixed transverse coordinate `offset`.
struct CrossSectionSpec {
    Axis axis = Axis::X;
    double offset = 0.5;
    bool operator==(const CrossSectionSpec&) const = default;
};

struct RunConfig {
    Parameters params;
    int grid_n = 128;
    double dt_factor = 1e-3;  ///< dt = dt_factor * dx
    double t_end = 9.8039;
    std::vector<double> snapshot_times;  ///< final time is always persisted
    ScenarioKind scenario = ScenarioKind::T1;
    std::string output_dir = "out";
    CrossSectionSpec cross_section;

    double dx() const { return 1.0 / (grid_n - 1); }
    double dt() const { return dt_factor * dx(); }
    /// Courant number mu = dt/dx^2; the stability guard bounds mu times the
    /// stiffest diffusivity (1/2, the chemical's) by 1/4.
    double courant() const { return dt() / (dx() * dx()); }

    bool operator==(const RunConfig&) const = default;
};

/// Applies the standard substitutions that map the dimensional system onto
/// the unit square. A and omega are not dimensional inputs; the result
/// carries their defaults.
Parameters nondimensionalize(const DimensionalParameters& d);

/// True iff 1 < A/v_star < exp(omega/pi), the window in which the initial
/// Gaussian collapses to a plateau strictly inside the dish.
bool plateau_condition_holds(double A, double omega, double v_star);

/// One entry per violated invariant, naming the field and value. Empty means
/// the parameter set is admissible.
std::vector<std::string> validate(const Parameters& p);

/// Parses a line-oriented `key = value` document with [section] headers
/// (sections: model, grid, run, output). Unknown keys and malformed values
/// throw parse_error with the line number; a parsed config that violates the
/// Courant guard or any invariant throws config_rejected.
RunConfig parse_config(std::string_view text);

/// Emits a document that parse_config maps back to exactly this config.
std::string serialize_config(const RunConfig& config);

/// FNV-1a over the serialized config; stable across runs and platforms.
std::uint64_t config_hash(const RunConfig& config);

}  // namespace chemofront
