#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qes/exact.hpp"

#include <random>
#include <vector>

using qes::discriminant_in_a;
using qes::find_critical_a_squared;
using qes::find_critical_a_squared_discriminant;
using qes::PrecisionGuard;
using qes::Rational;
using qes::Real;
using qes::ZInt;

namespace {

// Independent resultant: Sylvester matrix determinant by fraction-free
// Bareiss elimination over exact integers.
ZInt sylvester_resultant(const std::vector<ZInt>& p, const std::vector<ZInt>& q) {
    const int m = static_cast<int>(p.size()) - 1;
    const int n = static_cast<int>(q.size()) - 1;
    const int N = m + n;
    std::vector<std::vector<ZInt>> s(static_cast<std::size_t>(N),
                                     std::vector<ZInt>(static_cast<std::size_t>(N), ZInt(0)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= m; ++c)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + c)] =
                p[static_cast<std::size_t>(m - c)];
    for (int r = 0; r < m; ++r)
        for (int c = 0; c <= n; ++c)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + c)] =
                q[static_cast<std::size_t>(n - c)];
    ZInt sign(1), prev(1);
    for (int k = 0; k < N - 1; ++k) {
        if (s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < N; ++r)
                if (s[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return ZInt(0);
            std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                ZInt v = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                             s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                         s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                             s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / prev;
            }
        prev = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * s[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
}

// characteristic polynomial with integer a substituted, coefficients in E
std::vector<ZInt> char_poly_at_integer_a(int J, long a) {
    auto form = qes::derive_pt_recursion(J);
    std::vector<std::vector<ZInt>> minors;  // ascending coeffs
    minors.push_back({ZInt(1)});
    minors.push_back({ZInt(form.diag_a[0]) * a, ZInt(1)});
    for (int k = 1; k < J; ++k) {
        ZInt d = ZInt(-form.diag_a[static_cast<std::size_t>(k)]) * a;
        ZInt off = ZInt(form.sub[static_cast<std::size_t>(k - 1)]) *
                   ZInt(form.sup[static_cast<std::size_t>(k - 1)]);
        const auto& pm1 = minors[static_cast<std::size_t>(k)];
        const auto& pm2 = minors[static_cast<std::size_t>(k - 1)];
        std::vector<ZInt> cur(pm1.size() + 1, ZInt(0));
        for (std::size_t i = 0; i < pm1.size(); ++i) {
            cur[i + 1] += pm1[i];
            cur[i] -= d * pm1[i];
        }
        for (std::size_t i = 0; i < pm2.size(); ++i) cur[i] -= off * pm2[i];
        minors.push_back(std::move(cur));
    }
    return minors.back();
}

} // namespace

TEST_CASE("J=2 discriminant is exactly 16 t - 32") {
    auto curve = discriminant_in_a(2);
    REQUIRE(curve.in_t.degree() == 1);
    CHECK(curve.in_t[0] == -32);
    CHECK(curve.in_t[1] == 16);
    CHECK(curve.sign_at(Rational(1)) < 0);
    CHECK(curve.sign_at(Rational(3)) > 0);
    CHECK(curve.sign_at(Rational(2)) == 0);
}

TEST_CASE("J=3 discriminant root matches the golden critical value") {
    auto cb = find_critical_a_squared_discriminant(3, 14);
    PrecisionGuard g(30);
    CHECK(abs(cb.a_crit_sq - Real("10.5874700363")) < 5e-11);
}

TEST_CASE("PRS resultant equals Sylvester determinant at sampled integer a") {
    for (int J = 2; J <= 6; ++J) {
        auto curve = discriminant_in_a(J);
        for (long a : {1L, 2L, 5L}) {
            auto p = char_poly_at_integer_a(J, a);
            std::vector<ZInt> dp;
            for (std::size_t i = 1; i < p.size(); ++i)
                dp.push_back(p[i] * ZInt(static_cast<long>(i)));
            ZInt res = sylvester_resultant(p, dp);
            Rational diff = Rational(res);
            if (diff < 0) diff = -diff;
            // evaluate |curve| at t = a^2 exactly
            Rational val(0);
            for (auto it = curve.in_t.coeffs().rbegin(); it != curve.in_t.coeffs().rend(); ++it)
                val = val * Rational(a * a) + Rational(*it);
            if (val < 0) val = -val;
            CHECK(val == diff);
        }
    }
}

TEST_CASE("methods agree to the requested digits") {
    for (int J = 2; J <= 6; ++J) {
        auto sturm = find_critical_a_squared(J, 13);
        auto disc = find_critical_a_squared_discriminant(J, 13);
        PrecisionGuard g(40);
        Real rel = abs(sturm.a_crit_sq - disc.a_crit_sq) / disc.a_crit_sq;
        CHECK(rel < 1e-12);
    }
}

TEST_CASE("dispatcher and the cap") {
    auto d = find_critical_a_squared(2, 10, qes::BoundaryMethod::DiscriminantRoot);
    CHECK(d.method == qes::BoundaryMethod::DiscriminantRoot);
    auto s = find_critical_a_squared(2, 10, qes::BoundaryMethod::SturmBisection);
    CHECK(s.method == qes::BoundaryMethod::SturmBisection);
    CHECK_THROWS_AS((void)discriminant_in_a(21), qes::CapExceeded);
    CHECK_THROWS_AS((void)discriminant_in_a(1), std::invalid_argument);
}
