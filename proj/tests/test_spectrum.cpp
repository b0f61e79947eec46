#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qes/spectrum.hpp"

#include <random>

using qes::build_recursion;
using qes::characteristic_polynomial;
using qes::CReal;
using qes::eigenfunction;
using qes::Polynomial;
using qes::PrecisionGuard;
using qes::QesProblem;
using qes::qes_spectrum;
using qes::Real;

TEST_CASE("characteristic polynomials in closed form") {
    PrecisionGuard g(30);
    SUBCASE("J=2 Hermitian: E^2 - 8") {
        auto chi = characteristic_polynomial(build_recursion(QesProblem::hermitian(2)));
        REQUIRE(chi.degree() == 2);
        CHECK(chi[2] == 1);
        CHECK(chi[1] == 0);
        CHECK(chi[0] == -8);
    }
    SUBCASE("J=1 PT: E + a") {
        auto chi = characteristic_polynomial(build_recursion(QesProblem::pt(1, Real(5))));
        REQUIRE(chi.degree() == 1);
        CHECK(chi[1] == 1);
        CHECK(chi[0] == 5);
    }
    SUBCASE("J=2 PT: E^2 + 6aE + 5a^2 + 8 across sampled a") {
        for (int ia : {-3, -1, 0, 2, 7}) {
            Real a(ia);
            auto chi = characteristic_polynomial(build_recursion(QesProblem::pt(2, a)));
            REQUIRE(chi.degree() == 2);
            CHECK(chi[2] == 1);
            CHECK(abs(chi[1] - 6 * a) < 1e-27);
            CHECK(abs(chi[0] - (5 * a * a + 8)) < 1e-27);
        }
    }
    SUBCASE("J=3 Hermitian: E^3 - 64E") {
        auto chi = characteristic_polynomial(build_recursion(QesProblem::hermitian(3)));
        REQUIRE(chi.degree() == 3);
        CHECK(chi[3] == 1);
        CHECK(chi[2] == 0);
        CHECK(abs(chi[1] + 64) < 1e-27);
        CHECK(chi[0] == 0);
    }
}

TEST_CASE("closed-form spectra") {
    SUBCASE("J=2 PT a=2: real pair -6 -+ 2 sqrt 2") {
        auto s = qes_spectrum(QesProblem::pt(2, Real(2)), 30);
        REQUIRE(s.real_values.size() == 2);
        REQUIRE(s.complex_pairs.empty());
        PrecisionGuard g(40);
        Real r2 = sqrt(Real(2));
        CHECK(abs(s.real_values[0] - (-6 - 2 * r2)) < 1e-28);
        CHECK(abs(s.real_values[1] - (-6 + 2 * r2)) < 1e-28);
        CHECK(s.residual_bound < 1e-15);
    }
    SUBCASE("J=2 PT a=0: broken pair +-2i sqrt 2") {
        auto s = qes_spectrum(QesProblem::pt(2, Real(0)), 30);
        REQUIRE(s.real_values.empty());
        REQUIRE(s.complex_pairs.size() == 1);
        PrecisionGuard g(40);
        CHECK(abs(s.complex_pairs[0].first) < 1e-28);
        CHECK(abs(s.complex_pairs[0].second - 2 * sqrt(Real(2))) < 1e-28);
    }
    SUBCASE("J=2 PT a=sqrt2: coalesced double real root -3 sqrt 2") {
        PrecisionGuard g(44);
        Real a = sqrt(Real(2));
        auto s = qes_spectrum(QesProblem::pt(2, a), 30);
        REQUIRE(s.real_values.size() == 2);
        CHECK(abs(s.real_values[0] - s.real_values[1]) < 1e-10);
        CHECK(abs(s.real_values[0] + 3 * a) < 1e-12);
    }
    SUBCASE("J=1 PT: E = -a for several a") {
        for (int ia : {-4, 0, 3}) {
            auto s = qes_spectrum(QesProblem::pt(1, Real(ia)), 30);
            REQUIRE(s.real_values.size() == 1);
            CHECK(abs(s.real_values[0] + ia) < 1e-28);
        }
    }
    SUBCASE("J=3 Hermitian: {-8, 0, 8}") {
        auto s = qes_spectrum(QesProblem::hermitian(3), 30);
        REQUIRE(s.real_values.size() == 3);
        CHECK(abs(s.real_values[0] + 8) < 1e-27);
        CHECK(abs(s.real_values[1]) < 1e-27);
        CHECK(abs(s.real_values[2] - 8) < 1e-27);
    }
}

TEST_CASE("spectrum invariants") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> ia(-6, 6);
    SUBCASE("level count, conjugate pairing and PT trace identity") {
        for (int J = 1; J <= 8; ++J) {
            for (int rep = 0; rep < 3; ++rep) {
                Real a(ia(rng));
                auto s = qes_spectrum(QesProblem::pt(J, a), 30);
                CHECK(s.levels() == J);
                Real trace(0);
                for (const auto& e : s.real_values) trace += e;
                for (const auto& p : s.complex_pairs) trace += 2 * p.first;
                CHECK(abs(trace + a * J * (2 * J - 1)) < 1e-24);
                for (const auto& p : s.complex_pairs) CHECK(p.second > 0);
            }
        }
    }
    SUBCASE("Hermitian: trace 0 and entirely real for all tested J") {
        for (int J = 1; J <= 12; ++J) {
            auto s = qes_spectrum(QesProblem::hermitian(J), 30);
            CHECK(s.complex_pairs.empty());
            CHECK(static_cast<int>(s.real_values.size()) == J);
            Real trace(0);
            for (const auto& e : s.real_values) trace += e;
            CHECK(abs(trace) < 1e-20);
        }
    }
    SUBCASE("spectral reflection: spectrum(J,-a) = -spectrum(J,a)") {
        for (int J = 2; J <= 6; ++J) {
            Real a = Real(ia(rng)) + Real(1) / 3;
            auto sp = qes_spectrum(QesProblem::pt(J, a), 30);
            auto sm = qes_spectrum(QesProblem::pt(J, -a), 30);
            REQUIRE(sp.real_values.size() == sm.real_values.size());
            REQUIRE(sp.complex_pairs.size() == sm.complex_pairs.size());
            const std::size_t n = sp.real_values.size();
            for (std::size_t i = 0; i < n; ++i)
                CHECK(abs(sp.real_values[i] + sm.real_values[n - 1 - i]) < 1e-24);
            const std::size_t m = sp.complex_pairs.size();
            for (std::size_t i = 0; i < m; ++i) {
                CHECK(abs(sp.complex_pairs[i].first + sm.complex_pairs[m - 1 - i].first) < 1e-24);
                CHECK(abs(sp.complex_pairs[i].second - sm.complex_pairs[m - 1 - i].second) < 1e-24);
            }
        }
    }
}

TEST_CASE("eigenfunctions") {
    PrecisionGuard g(34);
    SUBCASE("J=1 PT: psi = envelope only, c = (1)") {
        auto f = eigenfunction(QesProblem::pt(1, Real(3)), Real(-3));
        REQUIRE(f.coeffs.size() == 1);
        CHECK(f.coeffs[0].re == 1);
        CHECK(f.coeffs[0].im == 0);
        CHECK(f.envelope == qes::Envelope::GrowingQuartic);
    }
    SUBCASE("J=2 Hermitian at E = 2 sqrt 2: c = (1, -sqrt 2)") {
        Real e = 2 * sqrt(Real(2));
        auto f = eigenfunction(QesProblem::hermitian(2), e);
        REQUIRE(f.coeffs.size() == 2);
        CHECK(abs(f.coeffs[1].re + sqrt(Real(2))) < 1e-30);
    }
    SUBCASE("J=2 PT a=2 at E = -6 + 2 sqrt 2: c_1 = -(E+a)/2") {
        Real a(2);
        Real e = -6 + 2 * sqrt(Real(2));
        auto f = eigenfunction(QesProblem::pt(2, a), e);
        CHECK(abs(f.coeffs[1].re - (-(e + a) / 2)) < 1e-30);
    }
    SUBCASE("non-eigenvalue is rejected") {
        CHECK_THROWS_AS((void)eigenfunction(QesProblem::pt(2, Real(2)), Real(-3)),
                        qes::NotAnEigenvalue);
    }
    SUBCASE("parity: psi(x) = psi(-x) at complex sample points") {
        Real e = -6 + 2 * sqrt(Real(2));
        auto f = eigenfunction(QesProblem::pt(2, Real(2)), e);
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int t = 0; t < 20; ++t) {
            CReal x(Real(u(rng)), Real(u(rng)));
            CHECK(qes::abs(f(x) - f(-x)) == 0);
        }
    }
}

TEST_CASE("ode residual of closed forms") {
    PrecisionGuard g(30);
    std::vector<CReal> grid;
    for (int i = -8; i <= 8; ++i) grid.emplace_back(Real(i) / 4, Real(0));
    SUBCASE("exact eigenfunction leaves arithmetic-level residual") {
        auto f = eigenfunction(QesProblem::pt(1, Real(1)), Real(-1));
        CHECK(qes::ode_residual(f, grid) < 1e-25);
        Real e = 2 * sqrt(Real(2));
        auto h = eigenfunction(QesProblem::hermitian(2), e);
        CHECK(qes::ode_residual(h, grid) < 1e-25);
    }
    SUBCASE("wrong energy leaves a linear-in-dE residual") {
        auto f = eigenfunction(QesProblem::pt(1, Real(1)), Real(-1));
        qes::QesEigenfunction wrong = f;
        wrong.energy = CReal(Real("-1.1"));
        Real r = qes::ode_residual(wrong, grid);
        CHECK(r > 1e-4);
        CHECK(r < 10);
    }
    SUBCASE("envelope overflow is reported") {
        auto f = eigenfunction(QesProblem::pt(1, Real(1)), Real(-1));
        std::vector<CReal> far{CReal(Real(60), Real(0))};
        CHECK_THROWS_AS((void)qes::ode_residual(f, far), qes::Overflow);
    }
}
