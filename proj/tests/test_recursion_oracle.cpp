#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qes/recursion.hpp"
#include "support/ansatz_oracle.hpp"

using qes::derive_pt_recursion;
using qes::QesProblem;
using qes::Rational;
using qes::Variant;
using qes::testing::ansatz_recursion_matrix;

TEST_CASE("ansatz substitution reproduces the PT recursion tables") {
    for (int J = 1; J <= 8; ++J) {
        auto form = derive_pt_recursion(J);
        for (int ia : {0, 1, -1, 2, -3, 5}) {
            Rational a(ia);
            auto oracle = ansatz_recursion_matrix(J, Variant::PtSymmetric, a);
            for (int k = 0; k < J; ++k) {
                for (int j = 0; j < J; ++j) {
                    Rational expected(0);
                    if (j == k) expected = -a * form.diag_a[static_cast<std::size_t>(k)];
                    else if (j == k - 1) expected = form.sub[static_cast<std::size_t>(k - 1)];
                    else if (j == k + 1) expected = form.sup[static_cast<std::size_t>(k)];
                    CHECK(oracle.m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] == expected);
                }
            }
        }
    }
}

TEST_CASE("ansatz substitution reproduces the Hermitian recursion") {
    for (int J = 1; J <= 8; ++J) {
        auto oracle = ansatz_recursion_matrix(J, Variant::Hermitian, Rational(0));
        for (int k = 0; k < J; ++k) {
            for (int j = 0; j < J; ++j) {
                Rational expected(0);
                if (j == k - 1) expected = Rational(-4 * (J - k));
                else if (j == k + 1) expected = Rational(-2 * (k + 1) * (2 * k + 1));
                CHECK(oracle.m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] == expected);
            }
        }
    }
}

TEST_CASE("PT table values at J=3") {
    auto f = derive_pt_recursion(3);
    REQUIRE(f.sub.size() == 2);
    REQUIRE(f.sup.size() == 2);
    REQUIRE(f.diag_a.size() == 3);
    CHECK(f.sub[0] == 8);
    CHECK(f.sub[1] == 4);
    CHECK(f.sup[0] == -2);
    CHECK(f.sup[1] == -12);
    CHECK(f.diag_a[0] == 1);
    CHECK(f.diag_a[1] == 5);
    CHECK(f.diag_a[2] == 9);
}

TEST_CASE("numeric substitution and problem validation") {
    using qes::Real;
    qes::PrecisionGuard g(30);
    auto rec = qes::build_recursion(QesProblem::pt(2, Real(2)));
    CHECK(rec.energy_sign == 1);
    CHECK(rec.diag[0] == -2);
    CHECK(rec.diag[1] == -10);
    CHECK(rec.sub[0] == 4);
    CHECK(rec.sup[0] == -2);

    auto h = qes::build_recursion(QesProblem::hermitian(2));
    CHECK(h.energy_sign == -1);
    CHECK(h.sub[0] == 4);
    CHECK(h.sup[0] == 2);
    CHECK(h.diag[0] == 0);

    CHECK_THROWS_AS(QesProblem(0, Real(0), Variant::Hermitian), std::invalid_argument);
    CHECK_THROWS_AS(QesProblem(2, Real(1), Variant::Hermitian), std::invalid_argument);
    CHECK_NOTHROW(QesProblem::pt(1, Real(5)));
}
