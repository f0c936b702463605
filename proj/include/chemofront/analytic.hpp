#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "chemofront/bessel.hpp"
#include "chemofront/params.hpp"

namespace chemofront {

/// Closed-form stationary chemical field for the zero-diffusion plateau:
/// c(r) = C3*I0(sqrt(2) r) + delta inside the plateau (r < R1) and
/// c(r) = C1*I0(sqrt(2) r) + C2*K0(sqrt(2) r) outside, C1 chosen so that
/// c'(dish_radius) = 0 and C2, C3 by C1-matching at R1.
struct AnalyticSteadyState {
    double R1;
    double C1, C2, C3;
    double delta;
};

/// Stationary circular front: radius, shifted equilibria, speed and the
/// radial linear rate at that radius.
struct FrontEquilibrium {
    double R0;
    double u1, u2;
    double s1;
    double radial_rate;
    bool stable;
};

/// p(x) = a3 x^3 + a2 x^2 + a1 x + a0 + b x ln x, whose positive zero inside
/// the dish locates the equilibrium front radius.
struct PolynomialCoefficients {
    double a3, a2, a1, a0, b;
};

/// R1 = sqrt(ln(A/v_star) / omega). Throws no_plateau when the admissibility
/// window fails, distinguishing the failing bound.
double plateau_radius(double A, double omega, double v_star);

/// The limiting bacteria plateau: 1 inside radius R1 (closed at r = R1 by
/// convention), 0 outside. r must lie in [0, dish_radius].
double stationary_v(double r, double R1);

AnalyticSteadyState chemical_constants(double R1, double delta);

/// Piecewise stationary chemical value; the outer branch applies for r >= R1.
double stationary_c(double r, const AnalyticSteadyState& s,
                    BesselMode mode = BesselMode::Exact);

struct RadialDerivatives {
    double first;
    double second;
};

/// c' and c'' on the outer branch (R1 <= r <= dish_radius), where the front
/// lives. PaperApprox mode evaluates c''(r) ~ C1(1 + 3r^2/4) + C2/r^2.
RadialDerivatives stationary_c_derivatives(double r, const AnalyticSteadyState& s,
                                           BesselMode mode = BesselMode::Exact);

/// Residual of (1/2)(c'' + c'/r) + delta*v_inf - c at radius r, evaluated on
/// the branch r falls in with exact Bessel values. Vanishes identically for a
/// correctly assembled steady state.
double stationary_equation_residual(double r, const AnalyticSteadyState& s);

/// Laplacian jump seen by the front kinetics: 2*(c(r) - delta*v_inf(r)).
double delta_c_at(double r, const AnalyticSteadyState& s,
                  BesselMode mode = BesselMode::Exact);

struct ShiftedEquilibria {
    double u1, u2;
};

/// Roots of the bistable nonlinearity shifted by the kinetic chemotaxis term:
/// u_{1,2} = (1+u_star)/2 +- sqrt((1-u_star)^2 + 4 chi0 dc / lambda)/2.
/// With first_order set, returns the expansions
/// u1 ~ 1 + chi0 dc/(lambda(1-u_star)), u2 ~ u_star - chi0 dc/(lambda(1-u_star)).
/// Throws complex_roots when the discriminant is negative.
ShiftedEquilibria shifted_equilibria(double delta_c, double lambda, double chi0,
                                     double u_star, bool first_order = false);

/// 1D bistable front speed s1 = sqrt(2 lambda Du) (u1/2 - u2).
double nagumo_speed(double u1, double u2, double lambda, double Du);

PolynomialCoefficients equilibrium_polynomial_coefficients(const Parameters& p,
                                                           const AnalyticSteadyState& s);

struct PolyEval {
    double value;
    double derivative;
};

PolyEval equilibrium_polynomial(double x, const Parameters& p, const AnalyticSteadyState& s);

struct EquilibriumResult {
    FrontEquilibrium primary;    ///< the innermost root's equilibrium data
    std::vector<double> roots;   ///< all distinct roots found, ascending
    bool ambiguous = false;      ///< more than one root
};

/// Newton-Raphson from 32 equispaced starts in (0.01, dish_radius) with a
/// bisection fallback on sign-bracketed subintervals; converged roots satisfy
/// |p| < 1e-12. The equilibrium data uses the first-order shifted equilibria
/// evaluated with the same small-argument chemical field the polynomial is
/// built from, so the returned radius is an exact fixed point of
/// integrate_front_radius. Throws no_equilibrium when no root exists.
EquilibriumResult equilibrium_radius(const Parameters& p, const AnalyticSteadyState& s);

struct StabilityRate {
    double rate;                 ///< Du/R0^2 - chi0 c''(R0), small-argument c''
    bool stable;                 ///< rate < 0
    double du_over_r2;           ///< Du/R0^2
    double chi0_cpp;             ///< chi0 c''(R0), small-argument form
    double chi0_cpp_exact;       ///< same with exact Bessel series, for reference
};

StabilityRate radial_stability(double R0, const Parameters& p, const AnalyticSteadyState& s);

/// Normal-mode growth rate of the azimuthal perturbation of order m:
/// rate(m) = -(Du/R0^2) m^2 + (Du/R0^2 - chi0 c''(R0)). m = 0 reduces to the
/// radial rate exactly.
double azimuthal_mode_rate(int m, double R0, const Parameters& p,
                           const AnalyticSteadyState& s);

enum class DomainExit { None, Lower, Upper };

struct FrontTrajectory {
    std::vector<std::pair<double, double>> points;  ///< (t, R)
    DomainExit exit = DomainExit::None;
};

/// Explicit Euler on dR/dt = -sqrt(2 lambda Du)(u1/2 - u2) - chi0 c'(R) - Du/R
/// with u1, u2 re-evaluated from delta_c(R) each step. Uses the small-argument
/// chemical field throughout, matching the equilibrium polynomial. Stops early
/// when R leaves (R1, dish_radius), flagging the exit side.
FrontTrajectory integrate_front_radius(double R_init, double t_end, double dt,
                                       const Parameters& p, const AnalyticSteadyState& s);

/// CSV report (quantity,value): R1, C1, C2, C3, R0, u1, u2, s1, radial rate,
/// and rate(m) for m = 0..8.
void write_analytic_report(std::ostream& os, const Parameters& p);

}  // namespace chemofront
