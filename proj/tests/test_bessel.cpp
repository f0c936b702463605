#include <doctest.h>

#include <cmath>

#include "chemofront/bessel.hpp"
#include "oracles.hpp"

using namespace chemofront;

TEST_SUITE("bessel") {

TEST_CASE("series leading terms") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i1(0.0) == 0.0);
}

TEST_CASE("values against the 30-term oracle") {
    // Frozen spot checks first.
    CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-12));
    CHECK(bessel_k0(1.0) == doctest::Approx(0.4210244382407083).epsilon(1e-12));

    for (int k = 0; k <= 25; ++k) {
        const double x = 1e-3 * std::pow(2000.0, k / 25.0);  // [1e-3, 2]
        CHECK(std::abs(bessel_i0(x) - oracle::i0(x)) < 1e-10);
        CHECK(std::abs(bessel_i1(x) - oracle::i1(x)) < 1e-10);
        CHECK(std::abs(bessel_k0(x) - oracle::k0(x)) < 1e-10);
        CHECK(std::abs(bessel_k1(x) - oracle::k1(x)) < 1e-10);
    }
}

TEST_CASE("paper approximants") {
    CHECK(bessel_i1(0.06, BesselMode::PaperApprox) == 0.03);
    CHECK(bessel_i0(0.2, BesselMode::PaperApprox) == 1.01);
    CHECK(bessel_k1(0.25, BesselMode::PaperApprox) == 4.0);
    CHECK(bessel_k0(0.5, BesselMode::PaperApprox) ==
          doctest::Approx(std::log(4.0) - euler_gamma).epsilon(1e-15));
}

TEST_CASE("K1 asymptote at small argument") {
    CHECK(bessel_k1(1e-3) == doctest::Approx(1000.0).epsilon(1e-3));
}

TEST_CASE("wronskian residual on a log grid") {
    // K0 I1 + K1 I0 = 1/x. K1 is defined through this identity, but every
    // factor still passes through independent series, so the residual bounds
    // their joint consistency.
    CHECK(std::abs(bessel_k0(0.5) * bessel_i1(0.5) + bessel_k1(0.5) * bessel_i0(0.5) - 2.0) <
          1e-10);
    for (int k = 0; k < 100; ++k) {
        const double x = 1e-3 * std::pow(2000.0, k / 99.0);
        const double resid =
            bessel_k0(x) * bessel_i1(x) + bessel_k1(x) * bessel_i0(x) - 1.0 / x;
        CHECK(std::abs(resid) < 1e-10);
    }
}

TEST_CASE("derivatives") {
    CHECK(bessel_derivatives(1e-9).dI0 == doctest::Approx(0.0).epsilon(1e-8));

    for (int k = 1; k <= 20; ++k) {
        const double x = 0.1 * k;  // (0, 2]
        CHECK(bessel_derivatives(x).dK0 < 0.0);
    }

    const double fd = oracle::central_diff([](double t) { return bessel_i0(t); }, 0.7, 1e-5);
    CHECK(std::abs(bessel_derivatives(0.7).dI0 - fd) < 1e-6);

    for (int k = 0; k <= 19; ++k) {
        const double x = 0.1 + 1.9 * k / 19.0;
        const auto d = bessel_derivatives(x);
        const double fd_i0 =
            oracle::central_diff([](double t) { return bessel_i0(t); }, x, 1e-5);
        const double fd_k0 =
            oracle::central_diff([](double t) { return bessel_k0(t); }, x, 1e-5);
        CHECK(std::abs(d.dI0 - fd_i0) < 1e-6);
        CHECK(std::abs(d.dK0 - fd_k0) < 1e-6);
    }
}

TEST_CASE("exact vs paper approximants") {
    // The I approximants hold to 2% on the whole working range; the K
    // approximants are cruder (K0 reaches ~4%, K1 ~9% at x = 0.3) and only
    // meet 2% below x ~ 0.12.
    auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
    for (int k = 1; k <= 50; ++k) {
        const double x = 0.3 * k / 50.0;
        CHECK(rel(bessel_i0(x, BesselMode::PaperApprox), bessel_i0(x)) < 0.02);
        CHECK(rel(bessel_i1(x, BesselMode::PaperApprox), bessel_i1(x)) < 0.02);
        CHECK(rel(bessel_k0(x, BesselMode::PaperApprox), bessel_k0(x)) < 0.04);
        CHECK(rel(bessel_k1(x, BesselMode::PaperApprox), bessel_k1(x)) < 0.10);
        if (x <= 0.12) {
            CHECK(rel(bessel_k0(x, BesselMode::PaperApprox), bessel_k0(x)) < 0.02);
            CHECK(rel(bessel_k1(x, BesselMode::PaperApprox), bessel_k1(x)) < 0.02);
        }
    }
}

TEST_CASE("monotonicity on (0, 2]") {
    double pi0 = bessel_i0(1e-6), pi1 = bessel_i1(1e-6);
    double pk0 = bessel_k0(1e-6), pk1 = bessel_k1(1e-6);
    for (int k = 1; k <= 1000; ++k) {
        const double x = 2.0 * k / 1000.0;
        const double ci0 = bessel_i0(x), ci1 = bessel_i1(x);
        const double ck0 = bessel_k0(x), ck1 = bessel_k1(x);
        CHECK(ci0 > pi0);
        CHECK(ci1 > pi1);
        CHECK(ck0 < pk0);
        CHECK(ck1 < pk1);
        pi0 = ci0;
        pi1 = ci1;
        pk0 = ck0;
        pk1 = ck1;
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_i0(-1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i1(-0.5), std::domain_error);
    CHECK_THROWS_AS(bessel_k0(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k1(-2.0), std::domain_error);
    CHECK_THROWS_AS(bessel_derivatives(0.0), std::domain_error);
}

}  // TEST_SUITE
