#pragma once

// Exact-arithmetic route to the symmetry boundary: the discriminant of the
// characteristic polynomial, taken in E with the potential parameter kept
// symbolic, vanishes precisely where two levels coalesce. Everything here
// runs over Z[a] (dense integer polynomials), so the boundary location
// inherits no floating-point error beyond the final decimal bisection.

#include "qes/boundary.hpp"
#include "qes/errors.hpp"
#include "qes/polynomial.hpp"
#include "qes/precision.hpp"
#include "qes/recursion.hpp"

#include <utility>
#include <vector>

namespace qes {

using ZPoly = Polynomial<ZInt>;  // dense polynomial in a over Z

namespace exact_detail {

/// Bivariate polynomial in E with Z[a] coefficients, ascending in E.
struct EPoly {
    std::vector<ZPoly> c;

    int degree() const {
        int d = static_cast<int>(c.size()) - 1;
        while (d >= 0 && c[static_cast<std::size_t>(d)].is_zero()) --d;
        return d;
    }
    bool is_zero() const { return degree() < 0; }
    const ZPoly& lc() const {
        static const ZPoly zero;
        int d = degree();
        return d < 0 ? zero : c[static_cast<std::size_t>(d)];
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

inline EPoly eppoly_sub(const EPoly& x, const EPoly& y) {
    EPoly r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        ZPoly xi = i < x.c.size() ? x.c[i] : ZPoly();
        ZPoly yi = i < y.c.size() ? y.c[i] : ZPoly();
        r.c[i] = xi - yi;
    }
    r.trim();
    return r;
}

/// x * s where s is a Z[a] scalar.
inline EPoly eppoly_scale(const EPoly& x, const ZPoly& s) {
    EPoly r;
    r.c.reserve(x.c.size());
    for (const auto& ci : x.c) r.c.push_back(ci * s);
    r.trim();
    return r;
}

/// x * s * E^k.
inline EPoly eppoly_scale_shift(const EPoly& x, const ZPoly& s, int k) {
    EPoly r;
    r.c.assign(x.c.size() + static_cast<std::size_t>(k), ZPoly());
    for (std::size_t i = 0; i < x.c.size(); ++i)
        r.c[i + static_cast<std::size_t>(k)] = x.c[i] * s;
    r.trim();
    return r;
}

inline EPoly eppoly_derivative(const EPoly& x) {
    EPoly r;
    if (x.c.size() <= 1) return r;
    r.c.resize(x.c.size() - 1);
    for (std::size_t i = 1; i < x.c.size(); ++i)
        r.c[i - 1] = x.c[i] * ZPoly::constant(ZInt(static_cast<long>(i)));
    r.trim();
    return r;
}

/// Exact division in Z[a]; throws if the division is not exact, which
/// would indicate a broken remainder sequence.
inline ZPoly zpoly_exact_div(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) throw std::logic_error("zpoly_exact_div: zero divisor");
    if (num.is_zero()) return ZPoly();
    std::vector<ZInt> r(num.coeffs());
    const int dd = den.degree();
    const int dq = num.degree() - dd;
    if (dq < 0) throw std::logic_error("zpoly_exact_div: degree mismatch");
    std::vector<ZInt> q(static_cast<std::size_t>(dq) + 1, ZInt(0));
    for (int k = num.degree(); k >= dd; --k) {
        ZInt top = r[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        ZInt f = top / den.leading();
        if (f * den.leading() != top)
            throw std::logic_error("zpoly_exact_div: inexact leading division");
        q[static_cast<std::size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] -= f * den[static_cast<std::size_t>(j)];
    }
    for (const auto& v : r)
        if (v != 0) throw std::logic_error("zpoly_exact_div: nonzero remainder");
    return ZPoly(std::move(q));
}

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
inline EPoly prem(EPoly A, const EPoly& B) {
    const int db = B.degree();
    int e = A.degree() - db + 1;
    while (!A.is_zero() && A.degree() >= db) {
        ZPoly la = A.lc();
        EPoly shifted = eppoly_scale_shift(B, la, A.degree() - db);
        A = eppoly_sub(eppoly_scale(A, B.lc()), shifted);
        --e;
    }
    ZPoly lb = B.lc();
    ZPoly f = ZPoly::constant(ZInt(1));
    for (int i = 0; i < e; ++i) f = f * lb;
    return eppoly_scale(A, f);
}

inline ZPoly zpoly_pow(const ZPoly& b, int n) {
    ZPoly r = ZPoly::constant(ZInt(1));
    for (int i = 0; i < n; ++i) r = r * b;
    return r;
}

/// Resultant of A and B with respect to E via the subresultant PRS,
/// up to sign (the caller fixes the sign convention).
inline ZPoly subresultant_resultant(EPoly A, EPoly B) {
    if (A.is_zero() || B.is_zero()) return ZPoly();
    if (A.degree() < B.degree()) std::swap(A, B);
    ZPoly g = ZPoly::constant(ZInt(1));
    ZPoly h = ZPoly::constant(ZInt(1));
    while (B.degree() > 0) {
        int delta = A.degree() - B.degree();
        EPoly R = prem(A, B);
        A = B;
        // B <- R / (g h^delta)
        ZPoly divisor = g * zpoly_pow(h, delta);
        B.c.clear();
        for (const auto& ci : R.c) B.c.push_back(zpoly_exact_div(ci, divisor));
        B.trim();
        if (B.is_zero()) return ZPoly();  // nonconstant gcd: identically degenerate
        g = A.lc();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = zpoly_exact_div(zpoly_pow(g, delta), zpoly_pow(h, delta - 1));
        }
    }
    // B is a nonzero constant in E
    int d = A.degree();
    ZPoly s = B.c[0];
    // h^(1-d) * s^d
    if (d == 0) return s;
    return zpoly_exact_div(zpoly_pow(s, d), zpoly_pow(h, d - 1));
}

/// Characteristic polynomial det(E I - M) of the PT recursion matrix with
/// a symbolic, mirroring the floating-point construction index for index.
inline EPoly characteristic_polynomial_exact(const PtRecursionForm& form) {
    auto matrix_diag = [&form](int k) {
        return ZPoly{ZInt(0), ZInt(-form.diag_a[static_cast<std::size_t>(k)])};
    };
    EPoly pm2;  // 1
    pm2.c = {ZPoly::constant(ZInt(1))};
    EPoly pm1;  // E - M[0][0]
    pm1.c = {-matrix_diag(0), ZPoly::constant(ZInt(1))};
    for (int k = 1; k < form.J; ++k) {
        ZInt offdiag = ZInt(form.sub[static_cast<std::size_t>(k - 1)]) *
                       ZInt(form.sup[static_cast<std::size_t>(k - 1)]);
        // (E - d_k) * pm1
        EPoly t1 = eppoly_scale_shift(pm1, ZPoly::constant(ZInt(1)), 1);
        t1 = eppoly_sub(t1, eppoly_scale(pm1, matrix_diag(k)));
        EPoly t2 = eppoly_scale(pm2, ZPoly::constant(offdiag));
        EPoly cur = eppoly_sub(t1, t2);
        pm2 = std::move(pm1);
        pm1 = std::move(cur);
    }
    return pm1;
}

} // namespace exact_detail

/// Discriminant-in-t curve: resultant_E(chi, d chi/dE) as an exact integer
/// polynomial in t = a^2. Sign convention: positive in the all-real region
/// (checked at t = 24J), so it is negative where exactly one conjugate
/// pair is complex.
struct DiscriminantCurve {
    int J = 0;
    Polynomial<ZInt> in_t;

    /// Exact sign at rational t.
    int sign_at(const Rational& t) const {
        Rational acc(0);
        for (auto it = in_t.coeffs().rbegin(); it != in_t.coeffs().rend(); ++it)
            acc = acc * t + Rational(*it);
        return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
    }
};

inline constexpr int discriminant_j_cap = 20;

inline DiscriminantCurve discriminant_in_a(int J) {
    if (J < 2) throw std::invalid_argument("discriminant_in_a: J must be >= 2");
    if (J > discriminant_j_cap)
        throw CapExceeded("discriminant_in_a: exact resultant supported up to J=20");
    using namespace exact_detail;
    const PtRecursionForm form = derive_pt_recursion(J);
    EPoly chi = characteristic_polynomial_exact(form);
    EPoly dchi = eppoly_derivative(chi);
    ZPoly res = subresultant_resultant(chi, dchi);
    if (res.is_zero())
        throw std::logic_error("discriminant_in_a: identically degenerate pencil");
    // a enters the spectrum only through its sign-free square: odd part
    // must cancel identically
    for (int i = 1; i <= res.degree(); i += 2)
        if (res[static_cast<std::size_t>(i)] != 0)
            throw std::logic_error("discriminant_in_a: odd power of a survived");
    std::vector<ZInt> tc;
    for (int i = 0; i <= res.degree(); i += 2) tc.push_back(res[static_cast<std::size_t>(i)]);
    DiscriminantCurve curve{J, Polynomial<ZInt>(std::move(tc))};
    if (curve.sign_at(Rational(24 * J)) < 0) curve.in_t = -curve.in_t;
    return curve;
}

/// Boundary location through the exact discriminant: a coarse count scan
/// brackets the transition, then bisection on the exact sign of the
/// discriminant refines it. The count checks at the end certify that the
/// root found is the one where the real-root count changes.
inline CriticalBoundary find_critical_a_squared_discriminant(int J,
                                                             unsigned target_digits = 12) {
    if (J == 1)
        throw NoTransition("find_critical_a_squared: J=1 has no transition (E=-a is real)");
    if (J < 1) throw std::invalid_argument("find_critical_a_squared: J must be >= 2");
    DiscriminantCurve curve = discriminant_in_a(J);

    PrecisionGuard guard(3 * target_digits + 10);
    const PtRecursionForm form = derive_pt_recursion(J);
    auto as_real = [](const Rational& q) -> Real {
        return Real(boost::multiprecision::numerator(q)) /
               Real(boost::multiprecision::denominator(q));
    };
    auto count_at = [&](const Rational& t) {
        return detail::real_root_count_at(form, as_real(t));
    };

    // coarse bracket from the count transition (dyadic rationals throughout)
    Rational lo(0), hi(24 * J);
    if (count_at(hi) != J)
        throw NoTransition("find_critical_a_squared: count at t=24J is not J");
    for (int i = 0; i < 24; ++i) {
        Rational mid = (lo + hi) / 2;
        if (count_at(mid) == J) hi = mid;
        else lo = mid;
    }

    // widen until the exact discriminant changes sign across the bracket:
    // negative just below the boundary (one complex pair), positive above
    Rational step = hi - lo;
    int guard_steps = 0;
    while (curve.sign_at(lo) >= 0) {
        lo -= step;
        if (lo < 0) { lo = 0; break; }
        if (++guard_steps > 64)
            throw NoTransition("find_critical_a_squared: no sign change below bracket");
    }
    guard_steps = 0;
    while (curve.sign_at(hi) <= 0) {
        hi += step;
        if (++guard_steps > 64)
            throw NoTransition("find_critical_a_squared: no sign change above bracket");
    }

    Rational tol(1);
    for (unsigned i = 0; i < target_digits; ++i) tol /= 10;
    while (hi - lo > tol * (hi + lo) / 2) {
        Rational mid = (lo + hi) / 2;
        int s = curve.sign_at(mid);
        if (s < 0) lo = mid;
        else if (s > 0) hi = mid;
        else { lo = mid; hi = mid; break; }
    }

    CriticalBoundary out;
    out.J = J;
    out.method = BoundaryMethod::DiscriminantRoot;
    out.lo = as_real(lo);
    out.hi = as_real(hi);
    out.a_crit_sq = (out.lo + out.hi) / 2;
    out.digits = detail::achieved_digits(out.lo, out.hi, out.a_crit_sq);

    // certify that this root is the count transition
    Real margin = (out.hi - out.lo) * 16 + pow(Real(10), -static_cast<int>(target_digits) + 1);
    if (detail::real_root_count_at(form, out.a_crit_sq + margin) != J ||
        detail::real_root_count_at(form, out.a_crit_sq - margin) != J - 2)
        throw NoTransition("find_critical_a_squared: discriminant root is not the "
                           "count transition");
    return out;
}

/// Method dispatcher matching the table contract.
inline CriticalBoundary find_critical_a_squared(int J, unsigned target_digits,
                                                BoundaryMethod method) {
    if (method == BoundaryMethod::SturmBisection)
        return find_critical_a_squared(J, target_digits);
    return find_critical_a_squared_discriminant(J, target_digits);
}

} // namespace qes
