// Test-side oracles, deliberately independent of the library paths they
// check: direct 30-term series with explicit factorials for the Bessel
// functions, and centered finite differences for derivatives.
#pragma once

#include <cmath>
#include <functional>

namespace oracle {

inline constexpr double gamma_e = 0.577215664901533;

inline double fact(int k) { return std::tgamma(static_cast<double>(k) + 1.0); }

inline double harmonic(int k) {
    double h = 0.0;
    for (int j = 1; j <= k; ++j) h += 1.0 / j;
    return h;
}

inline double i0(double x) {
    double s = 0.0;
    for (int k = 0; k < 30; ++k) {
        s += std::pow(0.5 * x, 2 * k) / (fact(k) * fact(k));
    }
    return s;
}

inline double i1(double x) {
    double s = 0.0;
    for (int k = 0; k < 30; ++k) {
        s += std::pow(0.5 * x, 2 * k + 1) / (fact(k) * fact(k + 1));
    }
    return s;
}

inline double k0(double x) {
    double s = 0.0;
    for (int k = 1; k < 30; ++k) {
        s += std::pow(0.5 * x, 2 * k) / (fact(k) * fact(k)) * harmonic(k);
    }
    return -(std::log(0.5 * x) + gamma_e) * i0(x) + s;
}

// Direct ascending series for K1 (digamma form), not the Wronskian route the
// library uses, so agreement genuinely cross-checks the identity.
inline double k1(double x) {
    auto psi = [](int n) { return -gamma_e + harmonic(n - 1); };
    double s = 0.0;
    for (int k = 0; k < 30; ++k) {
        s += (psi(k + 1) + psi(k + 2)) * std::pow(0.25 * x * x, k) / (fact(k) * fact(k + 1));
    }
    return std::log(0.5 * x) * i1(x) + 1.0 / x - 0.25 * x * s;
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
