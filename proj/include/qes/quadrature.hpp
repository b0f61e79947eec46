#pragma once

#include "qes/errors.hpp"
#include "qes/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <vector>

namespace qes {

/// Gauss-Legendre nodes and weights on [-1, 1] at the current working
/// precision, by Newton iteration on the Legendre recurrence.
inline void gauss_legendre_nodes(int n, std::vector<Real>& x, std::vector<Real>& w) {
    using boost::multiprecision::cos;
    const Real pi = boost::math::constants::pi<Real>();
    x.assign(static_cast<std::size_t>(n), Real(0));
    w.assign(static_cast<std::size_t>(n), Real(0));
    const int m = (n + 1) / 2;
    const Real tol = working_epsilon() * 10;
    for (int i = 0; i < m; ++i) {
        Real z = cos(pi * (i + Real("0.75")) / (n + Real("0.5")));
        Real pp(0);
        for (int it = 0; it < 200; ++it) {
            Real p0(1), p1(0);
            for (int j = 0; j < n; ++j) {
                Real p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1);
            Real dz = p0 / pp;
            z -= dz;
            if (abs(dz) < tol) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        Real wi = 2 / ((1 - z * z) * pp * pp);
        w[static_cast<std::size_t>(i)] = wi;
        w[static_cast<std::size_t>(n - 1 - i)] = wi;
    }
}

/// Fixed-order Gauss-Legendre panel integration of a complex-valued
/// integrand along a real parameter (used for smooth path integrals).
template <typename F>
CReal gauss_panel(F&& f, const Real& a, const Real& b, const std::vector<Real>& x,
                  const std::vector<Real>& w) {
    CReal acc(Real(0));
    const Real mid = (a + b) / 2, half = (b - a) / 2;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Real t = mid + half * x[i];
        acc += w[i] * f(t);
    }
    return half * acc;
}

/// Tanh-sinh (double exponential) quadrature on [a, b]. Converges at
/// machine rate even with integrable endpoint singularities such as the
/// inverse-square-root and square-root-turning-point behavior that shows
/// up in quantization integrals. The integrand is never evaluated at the
/// endpoints themselves.
template <typename F>
Real tanh_sinh(F&& f, const Real& a, const Real& b, const Real& tol,
               int max_levels = 14) {
    using boost::multiprecision::cosh;
    using boost::multiprecision::sinh;
    using boost::multiprecision::tanh;
    using boost::multiprecision::log;
    using boost::multiprecision::asinh;
    const Real pi_half = boost::math::constants::half_pi<Real>();
    const Real mid = (a + b) / 2, half = (b - a) / 2;
    const unsigned digits = Real::default_precision();
    // abscissas past t_max carry weights below the target precision
    const Real t_max = asinh(Real(static_cast<int>(digits) + 8) * log(Real(10)) / (2 * pi_half));

    // offsets from the nearer endpoint through 1 +- tanh(s) = 2/(1 + e^(-+2s)),
    // which avoids the catastrophic cancellation x = mid + half*tanh(s)
    // suffers near the endpoints (where singular integrands live)
    auto node = [&](const Real& t, Real& x, Real& w) {
        using boost::multiprecision::exp;
        Real s = pi_half * sinh(t);
        Real one_plus = 2 / (1 + exp(-2 * s));   // 1 + tanh(s)
        Real one_minus = 2 / (1 + exp(2 * s));   // 1 - tanh(s)
        if (t <= 0) x = a + half * one_plus;
        else x = b - half * one_minus;
        w = half * pi_half * cosh(t) * one_plus * one_minus;
    };

    Real h(1);
    Real x, w;
    node(Real(0), x, w);
    Real sum = w * f(x);
    // level 0: trapezoid at h=1
    for (Real t = h; t <= t_max; t += h) {
        node(t, x, w);
        sum += w * f(x);
        node(-t, x, w);
        sum += w * f(x);
    }
    Real integral = sum * h;
    for (int level = 1; level <= max_levels; ++level) {
        h /= 2;
        Real add(0);
        for (Real t = h; t <= t_max; t += 2 * h) {
            node(t, x, w);
            add += w * f(x);
            node(-t, x, w);
            add += w * f(x);
        }
        Real refined = integral / 2 + add * h;
        Real err = abs(refined - integral);
        integral = refined;
        Real scale = abs(integral);
        if (scale < 1) scale = 1;
        if (level >= 3 && err <= tol * scale) return integral;
    }
    throw NonConvergence("tanh_sinh: level cap reached before tolerance");
}

} // namespace qes
