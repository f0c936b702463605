#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chemofront/analytic.hpp"
#include "chemofront/errors.hpp"
#include "oracles.hpp"

using namespace chemofront;

namespace {

AnalyticSteadyState table1_state() {
    const Parameters p;
    return chemical_constants(plateau_radius(p.A, p.omega, p.v_star), p.delta);
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("plateau radius") {
    CHECK(plateau_radius(3.0, 1000.0, 0.5) == doctest::Approx(0.0423).epsilon(3e-3));
    CHECK(std::abs(plateau_radius(3.0, 1000.0, 0.5) - 0.0423) < 1e-4);

    const double v_star = 0.37, omega = 800.0;
    CHECK(plateau_radius(v_star * std::numbers::e, omega, v_star) ==
          doctest::Approx(1.0 / std::sqrt(omega)).epsilon(1e-12));

    CHECK(plateau_radius(6.0, 2000.0, 0.5) ==
          doctest::Approx(std::sqrt(std::log(12.0) / 2000.0)).epsilon(1e-14));
}

TEST_CASE("plateau errors distinguish the failing bound") {
    try {
        plateau_radius(0.4, 1000.0, 0.5);
        FAIL("expected no_plateau");
    } catch (const no_plateau& e) {
        CHECK(e.bound() == no_plateau::Bound::Lower);
    }
    try {
        plateau_radius(1e6, 3.0, 0.5);
        FAIL("expected no_plateau");
    } catch (const no_plateau& e) {
        CHECK(e.bound() == no_plateau::Bound::Upper);
    }
}

TEST_CASE("stationary v plateau") {
    CHECK(stationary_v(0.0, 0.0423) == 1.0);
    CHECK(stationary_v(0.1, 0.0423) == 0.0);
    CHECK(stationary_v(0.0423, 0.0423) == 1.0);  // closed at the rim
    CHECK_THROWS_AS(stationary_v(-0.1, 0.0423), std::domain_error);
    CHECK_THROWS_AS(stationary_v(0.6, 0.0423), std::domain_error);
}

TEST_CASE("chemical constants") {
    const AnalyticSteadyState s = table1_state();
    CHECK(s.C1 > 0.0);
    CHECK(s.C2 > 0.0);
    CHECK(std::abs(s.C2 - 0.0179) < 1e-4);

    // Against the independent series oracle.
    const double sqrt2 = std::numbers::sqrt2;
    const double c2_oracle = sqrt2 * s.delta * s.R1 * oracle::i1(sqrt2 * s.R1);
    CHECK(s.C2 == doctest::Approx(c2_oracle).epsilon(1e-12));

    // C1/C2 is a fixed Bessel ratio independent of R1.
    const double xb = sqrt2 * dish_radius;
    const double ratio = bessel_k1(xb) / bessel_i1(xb);
    for (double r1 : {0.02, 0.0423, 0.1, 0.3}) {
        const AnalyticSteadyState t = chemical_constants(r1, 10.0);
        CHECK(t.C1 / t.C2 == doctest::Approx(ratio).epsilon(1e-13));
    }

    // Linearity in delta.
    const AnalyticSteadyState d2 = chemical_constants(s.R1, 2.0 * s.delta);
    CHECK(d2.C1 == doctest::Approx(2.0 * s.C1).epsilon(1e-14));
    CHECK(d2.C2 == doctest::Approx(2.0 * s.C2).epsilon(1e-14));
    CHECK(d2.C3 == doctest::Approx(2.0 * s.C3).epsilon(1e-14));
}

TEST_CASE("stationary c is C1 at the plateau rim") {
    const AnalyticSteadyState s = table1_state();
    const double x1 = std::numbers::sqrt2 * s.R1;
    const double inner = s.C3 * bessel_i0(x1) + s.delta;
    const double outer = stationary_c(s.R1, s);
    CHECK(std::abs(inner - outer) < 1e-10);

    const double dinner = std::numbers::sqrt2 * s.C3 * bessel_i1(x1);
    const double douter = stationary_c_derivatives(s.R1, s).first;
    CHECK(std::abs(dinner - douter) < 1e-8);
}

TEST_CASE("Neumann closure at the dish rim") {
    const AnalyticSteadyState s = table1_state();
    CHECK(std::abs(stationary_c_derivatives(dish_radius, s).first) < 1e-8);
}

TEST_CASE("chemical decays outward") {
    const AnalyticSteadyState s = table1_state();
    double prev = stationary_c(s.R1, s);
    for (int k = 1; k <= 200; ++k) {
        const double r = s.R1 + (dish_radius - s.R1) * k / 200.0;
        const double c = stationary_c(r, s);
        CHECK(c < prev);
        CHECK(stationary_c_derivatives(r, s).first < 0.0);
        prev = c;
    }
}

TEST_CASE("derivatives match finite differences") {
    const AnalyticSteadyState s = table1_state();
    const auto d = stationary_c_derivatives(0.2, s);
    const double fd1 =
        oracle::central_diff([&](double r) { return stationary_c(r, s); }, 0.2, 1e-6);
    CHECK(std::abs(d.first - fd1) < 1e-6);
    const double fd2 = oracle::central_diff(
        [&](double r) { return stationary_c_derivatives(r, s).first; }, 0.2, 1e-6);
    CHECK(std::abs(d.second - fd2) < 1e-6);

    CHECK_THROWS_AS(stationary_c_derivatives(0.5 * s.R1, s), std::domain_error);
}

TEST_CASE("stationary equation residual vanishes on both branches") {
    const AnalyticSteadyState s = table1_state();
    for (int k = 1; k <= 50; ++k) {
        const double inner_r = s.R1 * k / 51.0;
        const double outer_r = s.R1 + (dish_radius - s.R1) * k / 51.0;
        CHECK(std::abs(stationary_equation_residual(inner_r, s)) < 1e-8);
        CHECK(std::abs(stationary_equation_residual(outer_r, s)) < 1e-8);
    }
}

TEST_CASE("laplacian jump") {
    const AnalyticSteadyState s = table1_state();
    CHECK(delta_c_at(0.2, s) == 2.0 * stationary_c(0.2, s));
    CHECK(delta_c_at(0.0, s) == doctest::Approx(2.0 * s.C3).epsilon(1e-12));
    // (1/2) dc + delta v_inf - c recovers zero.
    for (double r : {0.01, 0.03, 0.1, 0.3, 0.5}) {
        const double resid = 0.5 * delta_c_at(r, s) + s.delta * stationary_v(r, s.R1) -
                             stationary_c(r, s);
        CHECK(std::abs(resid) < 1e-12);
    }
}

TEST_CASE("shifted equilibria") {
    const auto plain = shifted_equilibria(0.0, 60.0, 3.2, 0.2);
    CHECK(plain.u1 == 1.0);
    CHECK(plain.u2 == 0.2);

    for (double dc : {0.05, 0.1, 0.2}) {
        const auto eq = shifted_equilibria(dc, 60.0, 3.2, 0.2);
        CHECK(eq.u1 > 1.0);
        CHECK(eq.u2 < 0.2);
        CHECK(eq.u2 < eq.u1);
    }

    CHECK_THROWS_AS(shifted_equilibria(-20.0, 60.0, 3.2, 0.2), complex_roots);
}

TEST_CASE("first-order shift is accurate to second order") {
    const double lambda = 60.0, chi0 = 3.2, u_star = 0.2;
    auto gap = [&](double eps) {
        const double dc = eps * lambda / chi0;  // so chi0 dc / lambda = eps
        const auto exact = shifted_equilibria(dc, lambda, chi0, u_star);
        const auto fo = shifted_equilibria(dc, lambda, chi0, u_star, true);
        return std::abs(exact.u1 - fo.u1) + std::abs(exact.u2 - fo.u2);
    };
    const double g1 = gap(1e-2);
    CHECK(g1 < 4.0 * 1e-4);          // O(eps^2) with a modest constant
    CHECK(gap(5e-3) < 0.3 * g1);     // quadratic scaling: halving eps quarters the gap
}

TEST_CASE("shifted cubic identity") {
    const double lambda = 60.0, chi0 = 3.2, u_star = 0.2, dc = 0.14;
    const auto eq = shifted_equilibria(dc, lambda, chi0, u_star);
    for (int k = 0; k < 20; ++k) {
        const double u = -0.2 + 1.6 * k / 19.0;
        const double lhs = lambda * u * (eq.u1 - u) * (u - eq.u2);
        const double rhs = lambda * u * (1.0 - u) * (u - u_star) + chi0 * dc * u;
        CHECK(std::abs(lhs - rhs) < 1e-10 * lambda);
    }
}

TEST_CASE("nagumo speed") {
    CHECK(nagumo_speed(1.0, 0.2, 60.0, 0.01) ==
          doctest::Approx(std::sqrt(1.2) * 0.3).epsilon(1e-14));
    CHECK(nagumo_speed(0.8, 0.4, 60.0, 0.01) == 0.0);
    CHECK(nagumo_speed(1.0, 0.6, 60.0, 0.01) < 0.0);
    CHECK((nagumo_speed(1.0, 0.45, 7.0, 0.2) > 0.0) == (1.0 - 2.0 * 0.45 > 0.0));
}

TEST_CASE("equilibrium polynomial") {
    const Parameters p;
    const AnalyticSteadyState s = table1_state();

    const auto k = equilibrium_polynomial_coefficients(p, s);
    CHECK(k.b < 0.0);

    // Sign change across the predicted radius.
    const double below = equilibrium_polynomial(0.1315 - 0.006, p, s).value;
    const double above = equilibrium_polynomial(0.1315 + 0.006, p, s).value;
    CHECK(below * above < 0.0);

    const double fd = oracle::central_diff(
        [&](double x) { return equilibrium_polynomial(x, p, s).value; }, 0.2, 1e-6);
    CHECK(std::abs(equilibrium_polynomial(0.2, p, s).derivative - fd) < 1e-8);

    CHECK_THROWS_AS(equilibrium_polynomial(0.0, p, s), std::domain_error);
}

TEST_CASE("equilibrium radius for the standard set") {
    const Parameters p;
    const AnalyticSteadyState s = table1_state();
    const EquilibriumResult eq = equilibrium_radius(p, s);

    CHECK(eq.roots.size() == 1);
    CHECK_FALSE(eq.ambiguous);
    CHECK(std::abs(eq.primary.R0 - 0.1315) < 0.002);
    CHECK(eq.primary.R0 > 0.0);
    CHECK(eq.primary.R0 < dish_radius);
    CHECK(std::abs(equilibrium_polynomial(eq.primary.R0, p, s).value) < 1e-12);
    CHECK(eq.primary.u2 < eq.primary.u1);
    CHECK(eq.primary.stable);
    CHECK(eq.primary.stable == (eq.primary.radial_rate < 0.0));
}

TEST_CASE("vanishing chemotaxis leaves no equilibrium") {
    Parameters p;
    p.chi0 = 1e-6;
    CHECK_THROWS_AS(equilibrium_radius(p, table1_state()), no_equilibrium);
}

TEST_CASE("doubling the production rate pushes the equilibrium outward") {
    const Parameters p;
    const AnalyticSteadyState s10 = table1_state();
    Parameters p20 = p;
    p20.delta = 20.0;
    const AnalyticSteadyState s20 = chemical_constants(s10.R1, 20.0);
    CHECK(s20.C1 == doctest::Approx(2.0 * s10.C1).epsilon(1e-14));
    const double r10 = equilibrium_radius(p, s10).primary.R0;
    const double r20 = equilibrium_radius(p20, s20).primary.R0;
    CHECK(r20 > r10);
}

TEST_CASE("radial stability at the printed radius") {
    const Parameters p;
    const AnalyticSteadyState s = table1_state();
    const StabilityRate st = radial_stability(0.1315, p, s);
    CHECK(std::abs(st.du_over_r2 - 0.5783) < 5e-3);
    CHECK(std::abs(st.chi0_cpp - 3.4409) < 0.02);
    CHECK(st.stable);
    CHECK(st.chi0_cpp_exact > 0.0);

    Parameters no_chem = p;
    no_chem.chi0 = 0.0;
    const StabilityRate off = radial_stability(0.1315, no_chem, s);
    CHECK(off.rate == off.du_over_r2);
    CHECK(off.rate > 0.0);
    CHECK_FALSE(off.stable);
}

TEST_CASE("stability flips along the chi0 axis") {
    const Parameters base;
    const AnalyticSteadyState s = table1_state();
    const double R0 = 0.1315;
    // rate = Du/R0^2 - chi0 c'' crosses zero at chi0* = (Du/R0^2)/c''.
    const double cpp = radial_stability(R0, base, s).chi0_cpp / base.chi0;
    const double chi_star = (base.Du / (R0 * R0)) / cpp;
    Parameters p = base;
    p.chi0 = chi_star * 0.99;
    CHECK_FALSE(radial_stability(R0, p, s).stable);
    p.chi0 = chi_star * 1.01;
    CHECK(radial_stability(R0, p, s).stable);
}

TEST_CASE("azimuthal mode rates") {
    const Parameters p;
    const AnalyticSteadyState s = table1_state();
    const EquilibriumResult eq = equilibrium_radius(p, s);
    const double R0 = eq.primary.R0;

    CHECK(azimuthal_mode_rate(0, R0, p, s) == radial_stability(R0, p, s).rate);

    double prev = azimuthal_mode_rate(0, R0, p, s);
    for (int m = 1; m <= 10; ++m) {
        const double rate = azimuthal_mode_rate(m, R0, p, s);
        CHECK(rate < prev);
        prev = rate;
    }
    for (int m = 0; m <= 10; ++m) {
        CHECK(azimuthal_mode_rate(m, R0, p, s) < 0.0);
    }
    CHECK_THROWS_AS(azimuthal_mode_rate(-1, R0, p, s), std::domain_error);
}

TEST_CASE("front ODE holds its equilibrium") {
    const Parameters p;
    const AnalyticSteadyState s = table1_state();
    const double R0 = equilibrium_radius(p, s).primary.R0;
    const FrontTrajectory traj = integrate_front_radius(R0, 2.0, 1e-4, p, s);
    CHECK(traj.exit == DomainExit::None);
    for (const auto& [t, r] : traj.points) {
        CHECK(std::abs(r - R0) < 1e-6);
    }
}

TEST_CASE("front ODE decays at the linear rate") {
    const Parameters p;
    const AnalyticSteadyState s = table1_state();
    const double R0 = equilibrium_radius(p, s).primary.R0;
    const double rate = radial_stability(R0, p, s).rate;

    for (double sign : {1.0, -1.0}) {
        const double d0 = 0.02;
        const FrontTrajectory traj =
            integrate_front_radius(R0 + sign * d0, 8.0, 1e-5, p, s);
        CHECK(traj.exit == DomainExit::None);
        // Log-slope over the second decade of |R - R0|, past the nonlinear
        // transient.
        double st = 0, sy = 0, stt = 0, sty = 0;
        long n = 0;
        double prev = d0;
        for (const auto& [t, r] : traj.points) {
            const double d = std::abs(r - R0);
            CHECK(d < prev + 1e-12);  // monotone approach
            prev = d;
            if (d <= 0.1 * d0 && d >= 0.01 * d0) {
                const double y = std::log(d);
                st += t;
                sy += y;
                stt += t * t;
                sty += t * y;
                ++n;
            }
        }
        REQUIRE(n > 10);
        const double slope = (sty - st * sy / n) / (stt - st * st / n);
        CHECK(std::abs(slope - rate) / std::abs(rate) < 0.05);
    }
}

TEST_CASE("front ODE without chemotaxis collapses through the plateau") {
    Parameters p;
    p.chi0 = 0.0;
    const AnalyticSteadyState s = table1_state();
    const FrontTrajectory traj = integrate_front_radius(0.3, 5.0, 1e-4, p, s);
    CHECK(traj.exit == DomainExit::Lower);
    for (std::size_t k = 1; k < traj.points.size(); ++k) {
        CHECK(traj.points[k].second < traj.points[k - 1].second);
    }
}

TEST_CASE("front ODE domain checks") {
    const AnalyticSteadyState s = table1_state();
    CHECK_THROWS_AS(integrate_front_radius(0.01, 1.0, 1e-4, Parameters{}, s),
                    std::domain_error);
    CHECK_THROWS_AS(integrate_front_radius(0.6, 1.0, 1e-4, Parameters{}, s),
                    std::domain_error);
    CHECK_THROWS_AS(integrate_front_radius(0.2, 1.0, 0.0, Parameters{}, s),
                    std::domain_error);
}

}  // TEST_SUITE
