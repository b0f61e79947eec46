#pragma once

#include "qes/errors.hpp"
#include "qes/polynomial.hpp"
#include "qes/precision.hpp"
#include "qes/sturm.hpp"

#include <boost/math/constants/constants.hpp>

#include <vector>

namespace qes {

/// Fujiwara bound: every root of p satisfies
/// |z| <= 2 * max_k |c_{n-k}/c_n|^{1/k}. Much tighter than the Cauchy
/// bound when low-order coefficients dwarf the root radius.
inline Real root_bound(const Polynomial<Real>& p) {
    using boost::multiprecision::abs;
    using boost::multiprecision::pow;
    const int n = p.degree();
    Real m(0);
    for (int k = 1; k <= n; ++k) {
        Real ratio = abs(p[static_cast<std::size_t>(n - k)]) / abs(p.leading());
        if (ratio == 0) continue;
        Real b = pow(ratio, Real(1) / k);
        if (b > m) m = b;
    }
    return 2 * m + working_epsilon();
}

/// Disjoint open intervals each containing exactly one distinct real root
/// of p inside (lo, hi), found by bisecting on the Sturm count.
inline std::vector<std::pair<Real, Real>>
isolate_real_roots(const Polynomial<Real>& p, const Real& lo, const Real& hi) {
    SturmChain sc = build_sturm_chain(p);
    if (sc.square_full) throw SquareFull("isolate_real_roots: repeated root detected");
    auto count = [&](const Real& a, const Real& b) {
        return detail::sign_variations_at(sc, a) - detail::sign_variations_at(sc, b);
    };
    std::vector<std::pair<Real, Real>> out;
    std::vector<std::pair<Real, Real>> work{{lo, hi}};
    const Real min_width = working_epsilon() * (abs(lo) + abs(hi) + 1) * 100;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = count(a, b);
        if (n == 0) continue;
        if (n == 1 || b - a < min_width) {
            out.emplace_back(a, b);
            continue;
        }
        Real mid = (a + b) / 2;
        work.emplace_back(a, mid);
        work.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

/// Newton iteration safeguarded by the bracket: any step leaving [lo, hi]
/// falls back to bisection. Requires a sign change across the bracket.
inline Real refine_bracketed_root(const Polynomial<Real>& p, Real lo, Real hi,
                                  unsigned digits, unsigned max_iter = 200) {
    using boost::multiprecision::abs;
    Polynomial<Real> dp = p.derivative();
    Real flo = p(lo), fhi = p(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NonConvergence("refine_bracketed_root: no sign change in bracket");
    const Real tol = pow(Real(10), -static_cast<int>(digits));
    Real x = (lo + hi) / 2;
    for (unsigned it = 0; it < max_iter; ++it) {
        Real f = p(x), d = dp(x);
        Real step;
        bool ok = d != 0;
        if (ok) {
            step = f / d;
            Real xn = x - step;
            ok = xn > lo && xn < hi;
            if (ok) {
                // keep the bracket valid
                if ((f > 0) == (flo > 0)) lo = x; else hi = x;
                x = xn;
            }
        }
        if (!ok) {
            if ((f > 0) == (flo > 0)) lo = x; else hi = x;
            x = (lo + hi) / 2;
        }
        Real scale = abs(x) + 1;
        if (hi - lo <= tol * scale || (ok && abs(step) <= tol * scale / 4))
            return x;
    }
    throw NonConvergence("refine_bracketed_root: iteration cap reached");
}

/// Simultaneous Weierstrass/Durand-Kerner iteration for all roots.
/// p need not be monic. Intended as the low-precision full-root pass;
/// results should be polished with polish_root afterwards.
inline std::vector<CReal> all_roots_durand_kerner(const Polynomial<Real>& p,
                                                  unsigned max_iter = 600) {
    const int n = p.degree();
    if (n < 1) return {};
    std::vector<Real> monic(p.coeffs());
    for (auto& c : monic) c /= p.leading();
    Polynomial<Real> pm{std::vector<Real>(monic)};

    const Real R = root_bound(pm) * Real("0.8");
    std::vector<CReal> z(static_cast<std::size_t>(n));
    const Real pi = boost::math::constants::pi<Real>();
    for (int k = 0; k < n; ++k) {
        // irregular angles avoid conjugate-symmetric stalling
        Real theta = 2 * pi * k / n + Real("0.562") / (k + 1);
        z[static_cast<std::size_t>(k)] = CReal(R * cos(theta), R * sin(theta));
    }
    const Real tol = pow(Real(10), -static_cast<int>(Real::default_precision()) + 4);
    for (unsigned it = 0; it < max_iter; ++it) {
        Real worst(0);
        for (int k = 0; k < n; ++k) {
            CReal num = pm(z[static_cast<std::size_t>(k)]);
            CReal den(Real(1), Real(0));
            for (int j = 0; j < n; ++j)
                if (j != k) den *= (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            CReal step = num / den;
            z[static_cast<std::size_t>(k)] -= step;
            Real s = abs(step) / (1 + abs(z[static_cast<std::size_t>(k)]));
            if (s > worst) worst = s;
        }
        if (worst < tol) return z;
    }
    // near-multiple roots converge linearly; accept the cluster and let the
    // caller's classification tolerance absorb the residual error
    return z;
}

/// Complex Newton polish against the original polynomial.
inline CReal polish_root(const Polynomial<Real>& p, CReal z, unsigned digits,
                         unsigned max_iter = 80) {
    Polynomial<Real> dp = p.derivative();
    const Real tol = pow(Real(10), -static_cast<int>(digits));
    for (unsigned it = 0; it < max_iter; ++it) {
        CReal f = p(z), d = dp(z);
        if (abs(d) == 0) break;
        CReal step = f / d;
        z -= step;
        if (abs(step) <= tol * (1 + abs(z))) break;
    }
    return z;
}

} // namespace qes
