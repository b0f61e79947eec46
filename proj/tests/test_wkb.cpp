#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qes/wkb.hpp"

#include <boost/math/constants/constants.hpp>

#include <random>

using qes::factorization_from_b;
using qes::PrecisionGuard;
using qes::quantization_integral;
using qes::Real;
using qes::scaled_energy_closed_form;
using qes::tanh_sinh;

TEST_CASE("critical factorization: b = -2 sqrt 3") {
    PrecisionGuard g(40);
    Real b = -2 * sqrt(Real(3));
    auto f = factorization_from_b(b);
    Real target = 4 / sqrt(Real(3));
    CHECK(abs(f.alpha - target) < 1e-35);
    CHECK(abs(f.beta - target) < 1e-35);
    CHECK(abs(f.F - 64 * sqrt(Real(3)) / 9) < 1e-34);
    CHECK(abs(f.F - Real("12.3168")) < 1e-4);
}

TEST_CASE("factorization at b = -4: alpha=2, beta=4, F=16") {
    PrecisionGuard g(40);
    auto f = factorization_from_b(Real(-4));
    CHECK(abs(f.alpha - 2) < 1e-36);
    CHECK(abs(f.beta - 4) < 1e-36);
    CHECK(abs(f.F - 16) < 1e-35);
}

TEST_CASE("positive b mirrors into negative turning points") {
    PrecisionGuard g(40);
    auto f = factorization_from_b(2 * sqrt(Real(3)));
    CHECK(f.alpha < 0);
    CHECK(f.beta < 0);
    CHECK(abs(f.alpha + 4 / sqrt(Real(3))) < 1e-35);
    CHECK_THROWS_AS((void)quantization_integral(2 * sqrt(Real(3)), f.F, Real("1e-12")),
                    qes::NoRealTurningPoints);
}

TEST_CASE("complex regime is rejected") {
    CHECK_THROWS_AS((void)factorization_from_b(Real(-3)), qes::ComplexRegime);
    CHECK_THROWS_AS((void)scaled_energy_closed_form(Real(1)), qes::ComplexRegime);
}

TEST_CASE("coefficient match: (y^2-alpha)^2 (y^2-beta) reproduces the scaled polynomial") {
    PrecisionGuard g(40);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> mag(3.47, 6.0);
    for (int trial = 0; trial < 40; ++trial) {
        Real b(mag(rng));
        if (trial % 2 == 0) b = -b;
        auto f = factorization_from_b(b);
        // expansion: y^6 - (2 alpha + beta) y^4 + (alpha^2 + 2 alpha beta) y^2 - alpha^2 beta
        CHECK(abs(-(2 * f.alpha + f.beta) - 2 * b) < 1e-33);
        CHECK(abs((f.alpha * f.alpha + 2 * f.alpha * f.beta) - (b * b + 4)) < 1e-32);
        CHECK(abs(f.alpha * f.alpha * f.beta - f.F) < 1e-32);
        // the closed form and the factorization route agree
        CHECK(abs(scaled_energy_closed_form(b) - f.F) < 1e-31);
    }
}

TEST_CASE("quantization integral hits 2 pi at the critical factorization") {
    PrecisionGuard g(40);
    Real b = -2 * sqrt(Real(3));
    auto f = factorization_from_b(b);
    Real I = quantization_integral(b, f.F, Real("1e-14"));
    Real two_pi = 2 * boost::math::constants::pi<Real>();
    CHECK(abs(I - two_pi) < 1e-10);
}

TEST_CASE("beta-function identity: int_0^1 u^(-1/2) (1-u)^(3/2) du = 3 pi / 8") {
    PrecisionGuard g(40);
    auto f = [](const Real& u) -> Real {
        return pow(u, Real(-0.5)) * pow(1 - u, Real("1.5"));
    };
    Real I = tanh_sinh(f, Real(0), Real(1), Real("1e-16"));
    Real target = 3 * boost::math::constants::pi<Real>() / 8;
    CHECK(abs(I - target) < 1e-12);
}

TEST_CASE("off-critical integral matches a dense independent quadrature") {
    PrecisionGuard g(40);
    // b=-4, F=16: integral of |y^2-2| sqrt(4-y^2) over [-2,2]; oracle uses
    // the smooth substitution y = 2 sin(theta) and composite Simpson split
    // at the interior kink
    Real I = quantization_integral(Real(-4), Real(16), Real("1e-14"));
    auto g_integrand = [](const Real& th) -> Real {
        Real y = 2 * sin(th);
        return abs(y * y - 2) * 4 * cos(th) * cos(th);
    };
    auto simpson = [&](const Real& a, const Real& b2, int n) -> Real {
        Real h = (b2 - a) / (2 * n);
        Real acc = g_integrand(a) + g_integrand(b2);
        for (int i = 1; i < 2 * n; ++i)
            acc += g_integrand(a + i * h) * ((i % 2) ? 4 : 2);
        return acc * h / 3;
    };
    const Real pi = boost::math::constants::pi<Real>();
    Real kink = asin(sqrt(Real(2)) / 2);  // y^2 = 2
    Real oracle = 2 * (simpson(Real(0), kink, 4096) + simpson(kink, pi / 2, 4096));
    CHECK(abs(I - oracle) < 1e-12);
}

TEST_CASE("halving the tolerance moves the result by less than the prior tolerance") {
    PrecisionGuard g(40);
    auto f = factorization_from_b(Real(-5));
    for (Real tol : {Real("1e-8"), Real("1e-10"), Real("1e-12")}) {
        Real a = quantization_integral(Real(-5), f.F, tol);
        Real b = quantization_integral(Real(-5), f.F, tol / 2);
        CHECK(abs(a - b) <= tol);
    }
}

TEST_CASE("mismatched (b, F) pairing is detected") {
    PrecisionGuard g(40);
    CHECK_THROWS_AS((void)quantization_integral(Real(-4), Real("15.9"), Real("1e-12")),
                    qes::NegativeIntegrand);
}

TEST_CASE("boundary constant search returns b^2 = 12") {
    PrecisionGuard g(40);
    Real b = qes::wkb_boundary_constant(Real("1e-9"));
    CHECK(abs(b * b - 12) < 1e-8);
    auto f = factorization_from_b(b);
    CHECK(abs(f.F - 64 * sqrt(Real(3)) / 9) < 1e-8);
    // at the critical point the two turning-point pairs merge
    CHECK(abs(f.alpha - f.beta) < 1e-7);
}

TEST_CASE("asymptotic energy formula") {
    PrecisionGuard g(40);
    CHECK(abs(qes::asymptotic_energy(1) - 64 * sqrt(Real(3)) / 9) < 1e-30);
    CHECK(abs(qes::asymptotic_energy(1) - Real("12.3168")) < 1e-4);
    CHECK(abs(qes::asymptotic_energy(100) - 64 * sqrt(Real(3)) / 9 * 1000) < 1e-25);
    // scaling property: quadrupling J scales the prediction by 8
    CHECK(abs(qes::asymptotic_energy(20) / qes::asymptotic_energy(5) - 8) < 1e-30);
    CHECK_THROWS_AS((void)qes::asymptotic_energy(0), std::invalid_argument);
}
