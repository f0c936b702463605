#include "chemofront/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "chemofront/errors.hpp"

namespace chemofront {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

void require_domain(bool ok, const char* what, double r) {
    if (!ok) throw std::domain_error(std::string(what) + ": r = " + std::to_string(r) +
                                     " outside the dish");
}

// Outer-branch chemical value; the small-argument form expands
// C1 I0(sqrt(2) r) + C2 K0(sqrt(2) r) about zero.
double outer_c(double r, const AnalyticSteadyState& s, BesselMode mode) {
    if (mode == BesselMode::PaperApprox) {
        return s.C1 * (1.0 + 0.5 * r * r) +
               s.C2 * (std::log(sqrt2) - euler_gamma - std::log(r));
    }
    const double x = sqrt2 * r;
    return s.C1 * bessel_i0(x) + s.C2 * bessel_k0(x);
}

double outer_c_prime(double r, const AnalyticSteadyState& s, BesselMode mode) {
    if (mode == BesselMode::PaperApprox) {
        return s.C1 * r - s.C2 / r;
    }
    const double x = sqrt2 * r;
    return sqrt2 * (s.C1 * bessel_i1(x) - s.C2 * bessel_k1(x));
}

double outer_c_second(double r, const AnalyticSteadyState& s, BesselMode mode) {
    if (mode == BesselMode::PaperApprox) {
        return s.C1 * (1.0 + 0.75 * r * r) + s.C2 / (r * r);
    }
    // I0'' = I0 - I1/x, K0'' = K0 + K1/x; chain rule brings the factor 2.
    const double x = sqrt2 * r;
    const double i0 = bessel_i0(x), i1 = bessel_i1(x);
    const double k0 = bessel_k0(x), k1 = bessel_k1(x);
    return 2.0 * (s.C1 * (i0 - i1 / x) + s.C2 * (k0 + k1 / x));
}

}  // namespace

double plateau_radius(double A, double omega, double v_star) {
    const double ratio = A / v_star;
    if (!(ratio > 1.0)) {
        throw no_plateau(no_plateau::Bound::Lower,
                         "A/v_star = " + std::to_string(ratio) +
                             " <= 1: the bump never reaches threshold, v dies everywhere");
    }
    if (!(ratio < std::exp(omega / std::numbers::pi))) {
        throw no_plateau(no_plateau::Bound::Upper,
                         "A/v_star = " + std::to_string(ratio) +
                             " >= exp(omega/pi): the plateau would exceed the dish");
    }
    return std::sqrt(std::log(ratio) / omega);
}

double stationary_v(double r, double R1) {
    require_domain(r >= 0.0 && r <= dish_radius, "stationary_v", r);
    return r <= R1 ? 1.0 : 0.0;
}

AnalyticSteadyState chemical_constants(double R1, double delta) {
    if (!(R1 > 0.0 && R1 < dish_radius)) {
        throw std::domain_error("chemical_constants: R1 outside (0, 1/sqrt(pi))");
    }
    if (!(delta > 0.0)) throw invalid_parameter("delta", "delta must be positive");

    const double xb = sqrt2 * dish_radius;  // sqrt(2/pi)
    const double x1 = sqrt2 * R1;
    const double i1b = bessel_i1(xb);
    const double k1b = bessel_k1(xb);
    const double i1r = bessel_i1(x1);
    const double k1r = bessel_k1(x1);
    const double base = sqrt2 * delta * R1;

    AnalyticSteadyState s;
    s.R1 = R1;
    s.delta = delta;
    s.C1 = base * k1b * i1r / i1b;
    s.C2 = base * i1r;
    s.C3 = base / i1b * (k1b * i1r - i1b * k1r);
    return s;
}

double stationary_c(double r, const AnalyticSteadyState& s, BesselMode mode) {
    require_domain(r >= 0.0 && r <= dish_radius, "stationary_c", r);
    if (r < s.R1) {
        return s.C3 * bessel_i0(sqrt2 * r, mode) + s.delta;
    }
    return outer_c(r, s, mode);
}

RadialDerivatives stationary_c_derivatives(double r, const AnalyticSteadyState& s,
                                           BesselMode mode) {
    if (r < s.R1) {
        throw std::domain_error("stationary_c_derivatives: r = " + std::to_string(r) +
                                " is inside the plateau; only the outer branch is exposed");
    }
    require_domain(r <= dish_radius, "stationary_c_derivatives", r);
    return {outer_c_prime(r, s, mode), outer_c_second(r, s, mode)};
}

double stationary_equation_residual(double r, const AnalyticSteadyState& s) {
    require_domain(r > 0.0 && r <= dish_radius, "stationary_equation_residual", r);
    double c, cp, cpp;
    if (r < s.R1) {
        const double x = sqrt2 * r;
        const double i0 = bessel_i0(x), i1 = bessel_i1(x);
        c = s.C3 * i0 + s.delta;
        cp = sqrt2 * s.C3 * i1;
        cpp = 2.0 * s.C3 * (i0 - i1 / x);
    } else {
        c = outer_c(r, s, BesselMode::Exact);
        cp = outer_c_prime(r, s, BesselMode::Exact);
        cpp = outer_c_second(r, s, BesselMode::Exact);
    }
    return 0.5 * (cpp + cp / r) + s.delta * stationary_v(r, s.R1) - c;
}

double delta_c_at(double r, const AnalyticSteadyState& s, BesselMode mode) {
    return 2.0 * (stationary_c(r, s, mode) - s.delta * stationary_v(r, s.R1));
}

ShiftedEquilibria shifted_equilibria(double delta_c, double lambda, double chi0,
                                     double u_star, bool first_order) {
    const double shift = chi0 * delta_c / (lambda * (1.0 - u_star));
    if (first_order) {
        return {1.0 + shift, u_star - shift};
    }
    const double disc = (1.0 - u_star) * (1.0 - u_star) + 4.0 * chi0 * delta_c / lambda;
    if (disc < 0.0) {
        throw complex_roots("shifted equilibria are complex (discriminant " +
                            std::to_string(disc) + "): the front cannot exist");
    }
    const double half_sum = 0.5 * (1.0 + u_star);
    const double half_gap = 0.5 * std::sqrt(disc);
    return {half_sum + half_gap, half_sum - half_gap};
}

double nagumo_speed(double u1, double u2, double lambda, double Du) {
    if (!(lambda > 0.0) || !(Du > 0.0)) {
        throw invalid_parameter(lambda > 0.0 ? "Du" : "lambda",
                                "nagumo_speed needs positive lambda and Du");
    }
    return std::sqrt(2.0 * lambda * Du) * (0.5 * u1 - u2);
}

PolynomialCoefficients equilibrium_polynomial_coefficients(const Parameters& p,
                                                           const AnalyticSteadyState& s) {
    const double one_minus = 1.0 - p.u_star;
    const double sqrt_2ld = std::sqrt(2.0 * p.lambda * p.Du);
    PolynomialCoefficients k;
    k.a3 = 3.0 * p.chi0 * s.C1 * std::sqrt(p.Du) / (std::sqrt(2.0 * p.lambda) * one_minus);
    k.a2 = p.chi0 * s.C1;
    k.a1 = sqrt_2ld * (0.5 - p.u_star +
                       (3.0 * p.chi0 / (p.lambda * one_minus)) *
                           (s.C1 + s.C2 * (std::log(sqrt2) - euler_gamma)));
    k.a0 = p.Du - p.chi0 * s.C2;
    k.b = -3.0 * p.chi0 * s.C2 * std::sqrt(2.0 * p.Du) / (std::sqrt(p.lambda) * one_minus);
    return k;
}

PolyEval equilibrium_polynomial(double x, const Parameters& p, const AnalyticSteadyState& s) {
    if (!(x > 0.0)) throw std::domain_error("equilibrium_polynomial: x must be positive");
    const PolynomialCoefficients k = equilibrium_polynomial_coefficients(p, s);
    const double lx = std::log(x);
    PolyEval e;
    e.value = k.a3 * x * x * x + k.a2 * x * x + k.a1 * x + k.a0 + k.b * x * lx;
    e.derivative = 3.0 * k.a3 * x * x + 2.0 * k.a2 * x + k.a1 + k.b * (lx + 1.0);
    return e;
}

namespace {

// Front ODE right-hand side on the small-argument chemical field; its zero is
// exactly the polynomial root.
double front_ode_rhs(double r, const Parameters& p, const AnalyticSteadyState& s) {
    const double dc = 2.0 * outer_c(r, s, BesselMode::PaperApprox);
    const auto eq = shifted_equilibria(dc, p.lambda, p.chi0, p.u_star, /*first_order=*/true);
    return -nagumo_speed(eq.u1, eq.u2, p.lambda, p.Du) -
           p.chi0 * outer_c_prime(r, s, BesselMode::PaperApprox) - p.Du / r;
}

FrontEquilibrium equilibrium_at(double R0, const Parameters& p, const AnalyticSteadyState& s) {
    FrontEquilibrium eq;
    eq.R0 = R0;
    const double dc = 2.0 * outer_c(R0, s, BesselMode::PaperApprox);
    const auto roots = shifted_equilibria(dc, p.lambda, p.chi0, p.u_star, /*first_order=*/true);
    eq.u1 = roots.u1;
    eq.u2 = roots.u2;
    eq.s1 = nagumo_speed(eq.u1, eq.u2, p.lambda, p.Du);
    const auto st = radial_stability(R0, p, s);
    eq.radial_rate = st.rate;
    eq.stable = st.stable;
    return eq;
}

}  // namespace

EquilibriumResult equilibrium_radius(const Parameters& p, const AnalyticSteadyState& s) {
    constexpr double lo = 0.01;
    const double hi = dish_radius;
    constexpr int n_starts = 32;
    constexpr double p_tol = 1e-12;
    constexpr int max_iter = 100;

    auto pval = [&](double x) { return equilibrium_polynomial(x, p, s).value; };

    std::vector<double> roots;
    auto record = [&](double x) {
        if (!(x > 0.0 && x < hi)) return;
        if (!(std::abs(pval(x)) < p_tol)) return;
        for (double r : roots) {
            if (std::abs(r - x) < 1e-7) return;
        }
        roots.push_back(x);
    };

    // Multi-start Newton.
    for (int k = 0; k < n_starts; ++k) {
        double x = lo + (hi - lo) * (k + 0.5) / n_starts;
        bool ok = false;
        for (int it = 0; it < max_iter; ++it) {
            const PolyEval e = equilibrium_polynomial(x, p, s);
            if (std::abs(e.value) < p_tol) {
                ok = true;
                break;
            }
            if (e.derivative == 0.0) break;
            const double next = x - e.value / e.derivative;
            if (!(next > 1e-8 && next < hi)) break;
            x = next;
        }
        if (ok) record(x);
    }

    // Bisection fallback on sign-bracketed subintervals; the logarithmic term
    // can push Newton out of the interval from a bad start.
    constexpr int n_scan = 512;
    double prev_x = lo, prev_p = pval(lo);
    for (int k = 1; k <= n_scan; ++k) {
        const double x = lo + (hi - lo) * k / n_scan;
        const double px = pval(x);
        if (prev_p == 0.0) record(prev_x);
        if (prev_p * px < 0.0) {
            double a = prev_x, b = x, fa = prev_p;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = pval(m);
                if (std::abs(fm) < p_tol || 0.5 * (b - a) < 1e-16) break;
                if (fa * fm < 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            record(0.5 * (a + b));
        }
        prev_x = x;
        prev_p = px;
    }

    if (roots.empty()) {
        throw no_equilibrium("equilibrium polynomial has no zero in (0, 1/sqrt(pi))");
    }
    std::sort(roots.begin(), roots.end());

    EquilibriumResult out;
    out.roots = roots;
    out.ambiguous = roots.size() > 1;
    out.primary = equilibrium_at(roots.front(), p, s);
    return out;
}

StabilityRate radial_stability(double R0, const Parameters& p, const AnalyticSteadyState& s) {
    StabilityRate st;
    st.du_over_r2 = p.Du / (R0 * R0);
    st.chi0_cpp = p.chi0 * outer_c_second(R0, s, BesselMode::PaperApprox);
    st.chi0_cpp_exact = p.chi0 * outer_c_second(R0, s, BesselMode::Exact);
    st.rate = st.du_over_r2 - st.chi0_cpp;
    st.stable = st.rate < 0.0;
    return st;
}

double azimuthal_mode_rate(int m, double R0, const Parameters& p,
                           const AnalyticSteadyState& s) {
    if (m < 0) throw std::domain_error("azimuthal_mode_rate: m must be >= 0");
    const auto st = radial_stability(R0, p, s);
    return -st.du_over_r2 * static_cast<double>(m) * m + st.rate;
}

FrontTrajectory integrate_front_radius(double R_init, double t_end, double dt,
                                       const Parameters& p, const AnalyticSteadyState& s) {
    if (!(R_init > s.R1 && R_init < dish_radius)) {
        throw std::domain_error("integrate_front_radius: R_init outside (R1, 1/sqrt(pi))");
    }
    if (!(dt > 0.0)) throw std::domain_error("integrate_front_radius: dt must be positive");

    FrontTrajectory traj;
    double R = R_init;
    traj.points.emplace_back(0.0, R);
    const long nsteps = static_cast<long>(std::ceil(t_end / dt));
    for (long k = 1; k <= nsteps; ++k) {
        R += dt * front_ode_rhs(R, p, s);
        const double t = k * dt;
        if (R <= s.R1) {
            traj.exit = DomainExit::Lower;
            traj.points.emplace_back(t, R);
            break;
        }
        if (R >= dish_radius) {
            traj.exit = DomainExit::Upper;
            traj.points.emplace_back(t, R);
            break;
        }
        traj.points.emplace_back(t, R);
    }
    return traj;
}

void write_analytic_report(std::ostream& os, const Parameters& p) {
    const double R1 = plateau_radius(p.A, p.omega, p.v_star);
    const AnalyticSteadyState s = chemical_constants(R1, p.delta);
    const EquilibriumResult eq = equilibrium_radius(p, s);

    os.precision(12);
    os << "quantity,value\n";
    os << "R1," << R1 << "\n";
    os << "C1," << s.C1 << "\n";
    os << "C2," << s.C2 << "\n";
    os << "C3," << s.C3 << "\n";
    os << "R0," << eq.primary.R0 << "\n";
    os << "u1," << eq.primary.u1 << "\n";
    os << "u2," << eq.primary.u2 << "\n";
    os << "s1," << eq.primary.s1 << "\n";
    os << "radial_rate," << eq.primary.radial_rate << "\n";
    for (int m = 0; m <= 8; ++m) {
        os << "rate_m" << m << "," << azimuthal_mode_rate(m, eq.primary.R0, p, s) << "\n";
    }
}

}  // namespace chemofront
