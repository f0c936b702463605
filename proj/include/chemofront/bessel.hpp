#pragma once

namespace chemofront {

/// Exact evaluates the defining power series (truncated at 1e-16 relative);
/// PaperApprox evaluates the small-argument closed forms
///   I0 ~ 1 + x^2/4,  I1 ~ x/2,  K0 ~ ln(2/x) - gamma,  K1 ~ 1/x,
/// which the asymptotic front formulas are built on. The approximants are
/// meant for x < 1; nothing enforces that.
enum class BesselMode { Exact, PaperApprox };

/// Euler-Mascheroni constant, 15 digits.
inline constexpr double euler_gamma = 0.577215664901533;

double bessel_i0(double x, BesselMode mode = BesselMode::Exact);
double bessel_i1(double x, BesselMode mode = BesselMode::Exact);
double bessel_k0(double x, BesselMode mode = BesselMode::Exact);
double bessel_k1(double x, BesselMode mode = BesselMode::Exact);

struct BesselDerivatives {
    double dI0;  ///< I0'(x) = I1(x)
    double dK0;  ///< K0'(x) = -K1(x)
};

BesselDerivatives bessel_derivatives(double x, BesselMode mode = BesselMode::Exact);

}  // namespace chemofront
