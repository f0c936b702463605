#include "chemofront/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chemofront {

namespace {

constexpr double rel_tol = 1e-16;

void require(bool ok, const char* fn, double x) {
    if (!ok) {
        throw std::domain_error(std::string(fn) + " domain error at x = " + std::to_string(x));
    }
}

// I0(x) = sum_k (x^2/4)^k / (k!)^2
double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < rel_tol * sum) break;
    }
    return sum;
}

// I1(x) = (x/2) sum_k (x^2/4)^k / (k! (k+1)!)
double i1_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < rel_tol * sum) break;
    }
    return 0.5 * x * sum;
}

// K0(x) = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 * H_k
double k0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, harmonic = 0.0, sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        const double add = term * harmonic;
        sum += add;
        if (add < rel_tol * (sum + 1.0)) break;
    }
    return -(std::log(0.5 * x) + euler_gamma) * i0_series(x) + sum;
}

}  // namespace

double bessel_i0(double x, BesselMode mode) {
    require(x >= 0.0, "bessel_i0", x);
    if (mode == BesselMode::PaperApprox) return 1.0 + 0.25 * x * x;
    return i0_series(x);
}

double bessel_i1(double x, BesselMode mode) {
    require(x >= 0.0, "bessel_i1", x);
    if (mode == BesselMode::PaperApprox) return 0.5 * x;
    return i1_series(x);
}

double bessel_k0(double x, BesselMode mode) {
    require(x > 0.0, "bessel_k0", x);
    if (mode == BesselMode::PaperApprox) return std::log(2.0 / x) - euler_gamma;
    return k0_series(x);
}

// K1 comes from the Wronskian K0 I1 + K1 I0 = 1/x, keeping a single series
// source of truth; the identity itself is checked in the test suite.
double bessel_k1(double x, BesselMode mode) {
    require(x > 0.0, "bessel_k1", x);
    if (mode == BesselMode::PaperApprox) return 1.0 / x;
    return (1.0 / x - k0_series(x) * i1_series(x)) / i0_series(x);
}

BesselDerivatives bessel_derivatives(double x, BesselMode mode) {
    require(x > 0.0, "bessel_derivatives", x);
    return {bessel_i1(x, mode), -bessel_k1(x, mode)};
}

}  // namespace chemofront
