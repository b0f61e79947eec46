#pragma once

#include "qes/errors.hpp"
#include "qes/polynomial.hpp"
#include "qes/precision.hpp"

#include <vector>

namespace qes {

/// Sturm chain: p, p', then negated remainders, each rescaled to unit
/// max coefficient (positive scalings keep every sign evaluation intact).
/// Chain construction stops when a remainder is numerically zero; if that
/// happens before a constant is reached the input has a repeated root.
struct SturmChain {
    std::vector<Polynomial<Real>> chain;
    bool square_full = false;
};

namespace detail {

/// Coefficients at or below this relative size are treated as exact zeros
/// when building remainder sequences. Set from the working precision with
/// a margin for the growth of the remainder recursion.
inline Real sturm_zero_tol() {
    unsigned digits = Real::default_precision();
    return pow(Real(10), -static_cast<int>(3 * digits / 4));
}

/// p(s*x): brings roots into O(1) range so the remainder sequence stays
/// well conditioned. Counting is invariant under positive scalings.
inline Polynomial<Real> scale_variable(const Polynomial<Real>& p, const Real& s) {
    std::vector<Real> c(p.coeffs());
    Real f(1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        f *= s;
        c[i] *= f;
    }
    return Polynomial<Real>(std::move(c));
}

/// Fujiwara-style scale estimate (duplicated from roots.hpp to keep this
/// header free-standing): max_k |c_{n-k}/c_n|^{1/k}.
inline Real root_scale(const Polynomial<Real>& p) {
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
    return m;
}

} // namespace detail

inline SturmChain build_sturm_chain(const Polynomial<Real>& p) {
    SturmChain sc;
    const Real tol = detail::sturm_zero_tol();
    Polynomial<Real> a = normalize_max(p);
    Polynomial<Real> b = normalize_max(a.derivative());
    sc.chain.push_back(a);
    if (a.degree() <= 0) return sc;
    sc.chain.push_back(b);
    while (b.degree() > 0) {
        auto [q, r] = divrem(a, b);
        r = chop_leading(r, tol * max_abs_coeff(a));
        if (r.is_zero()) {
            // nonconstant gcd: repeated root
            sc.square_full = true;
            return sc;
        }
        a = b;
        b = normalize_max(-r);
        sc.chain.push_back(b);
    }
    return sc;
}

namespace detail {

inline int sign_of(const Real& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Number of sign changes of the chain evaluated at x (zeros skipped).
inline int sign_variations_at(const SturmChain& sc, const Real& x) {
    int variations = 0, last = 0;
    for (const auto& q : sc.chain) {
        int s = sign_of(q(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/// Sign changes in the limit x -> +inf or -inf (from leading coefficients).
inline int sign_variations_at_infinity(const SturmChain& sc, bool positive) {
    int variations = 0, last = 0;
    for (const auto& q : sc.chain) {
        if (q.is_zero()) continue;
        int s = sign_of(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

} // namespace detail

/// Count of distinct real roots of p in (lo, hi) by Sturm's theorem.
/// Endpoints that happen to be roots are nudged outward by one working
/// epsilon so the count includes them deterministically.
/// Throws SquareFull when gcd(p, p') is nonconstant; the caller decides
/// whether to deflate, since a repeated root is exactly the coalescence
/// signature at the symmetry boundary.
inline int count_real_roots(const Polynomial<Real>& p, Real lo, Real hi) {
    if (p.degree() < 1)
        throw std::invalid_argument("count_real_roots: polynomial is constant");
    Real s = detail::root_scale(p);
    if (s < 1) s = 1;
    SturmChain sc = build_sturm_chain(detail::scale_variable(p, s));
    if (sc.square_full) throw SquareFull("count_real_roots: repeated root detected");
    lo /= s;
    hi /= s;
    const Real eps = working_epsilon();
    const Polynomial<Real>& pn = sc.chain.front();
    using boost::multiprecision::abs;
    if (abs(pn(lo)) <= eps * (1 + abs(lo))) lo -= eps * (1 + abs(lo)) * 10;
    if (abs(pn(hi)) <= eps * (1 + abs(hi))) hi += eps * (1 + abs(hi)) * 10;
    return detail::sign_variations_at(sc, lo) - detail::sign_variations_at(sc, hi);
}

/// Count of distinct real roots on the whole line.
inline int count_real_roots(const Polynomial<Real>& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("count_real_roots: polynomial is constant");
    Real s = detail::root_scale(p);
    if (s < 1) s = 1;
    SturmChain sc = build_sturm_chain(detail::scale_variable(p, s));
    if (sc.square_full) throw SquareFull("count_real_roots: repeated root detected");
    return detail::sign_variations_at_infinity(sc, false) -
           detail::sign_variations_at_infinity(sc, true);
}

} // namespace qes
