#pragma once

#include "qes/errors.hpp"
#include "qes/polynomial.hpp"
#include "qes/precision.hpp"
#include "qes/recursion.hpp"
#include "qes/roots.hpp"
#include "qes/sturm.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qes {

/// Characteristic polynomial det(E*I - M) of the recursion matrix, monic
/// with leading coefficient +1, computed by the tridiagonal minor
/// recurrence D_k = (E - M_kk) D_{k-1} - M_sub*M_sup * D_{k-2}.
inline Polynomial<Real> characteristic_polynomial(const TridiagonalRecursion& r) {
    Polynomial<Real> pm2 = Polynomial<Real>::constant(Real(1));
    Polynomial<Real> pm1{-r.matrix_diag(0), Real(1)};
    for (int k = 1; k < r.size; ++k) {
        Polynomial<Real> lin{-r.matrix_diag(k), Real(1)};
        Polynomial<Real> cur =
            lin * pm1 - (r.matrix_sub(k) * r.matrix_sup(k - 1)) * pm2;
        pm2 = std::move(pm1);
        pm1 = std::move(cur);
    }
    return pm1;
}

/// The quasi-exact part of a spectrum: all J roots of the characteristic
/// polynomial. Nonreal roots come in conjugate pairs and are stored once
/// with im > 0. A coalesced pair is reported as a repeated real value.
struct Spectrum {
    std::vector<Real> real_values;                 // ascending
    std::vector<std::pair<Real, Real>> complex_pairs;  // (re, im>0), by re
    Real residual_bound{0};

    int levels() const {
        return static_cast<int>(real_values.size() + 2 * complex_pairs.size());
    }
};

enum class Envelope { DecayingQuartic, GrowingQuartic };

/// Closed-form eigenfunction: envelope * polynomial in x^2. Coefficients
/// are complex so that broken-symmetry (complex-energy) states are
/// representable; real states carry zero imaginary parts.
struct QesEigenfunction {
    QesProblem problem;
    CReal energy;
    std::vector<CReal> coeffs;  // c_0..c_{J-1}
    Envelope envelope;

    /// Exponent g(x) of the envelope e^{g}.
    CReal envelope_exponent(const CReal& x) const {
        CReal x2 = x * x;
        if (envelope == Envelope::DecayingQuartic) return -(x2 * x2) / Real(4);
        return x2 * x2 / Real(4) + problem.a * x2 / Real(2);
    }

    CReal polynomial_part(const CReal& x) const {
        CReal u = x * x, acc(Real(0));
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
        return acc;
    }

    CReal operator()(const CReal& x) const {
        return exp(envelope_exponent(x)) * polynomial_part(x);
    }
};

/// Coefficients c_k by forward substitution from c_0 = 1. The trailing
/// recursion row acts as the consistency check that `energy` really is an
/// eigenvalue; its relative residual must stay below tol (default
/// 10^(-working_digits/2)).
inline QesEigenfunction eigenfunction(const QesProblem& p, const CReal& energy,
                                      Real tol = Real(0)) {
    using boost::multiprecision::abs;
    if (tol == 0)
        tol = pow(Real(10), -static_cast<int>(Real::default_precision() / 2));
    TridiagonalRecursion r = build_recursion(p);
    const Real s(r.energy_sign);
    std::vector<CReal> c(static_cast<std::size_t>(p.J));
    c[0] = CReal(Real(1));
    Real scale(1);
    for (int k = 0; k + 1 < p.J; ++k) {
        // row k: sub*c_{k-1} + (diag[k] - s E) c_k + sup[k] c_{k+1} = 0
        CReal acc = (r.diag[static_cast<std::size_t>(k)] - s * energy) *
                    c[static_cast<std::size_t>(k)];
        if (k > 0)
            acc += r.sub[static_cast<std::size_t>(k - 1)] * c[static_cast<std::size_t>(k - 1)];
        c[static_cast<std::size_t>(k + 1)] = -(acc / r.sup[static_cast<std::size_t>(k)]);
        scale = std::max(scale, abs(c[static_cast<std::size_t>(k + 1)]));
    }
    // trailing row k = J-1 has no c_{k+1} term
    {
        int k = p.J - 1;
        CReal acc = (r.diag[static_cast<std::size_t>(k)] - s * energy) *
                    c[static_cast<std::size_t>(k)];
        if (k > 0)
            acc += r.sub[static_cast<std::size_t>(k - 1)] * c[static_cast<std::size_t>(k - 1)];
        Real denom = scale * (1 + abs(energy));
        if (abs(acc) > tol * denom)
            throw NotAnEigenvalue("eigenfunction: trailing recursion row residual " +
                                  abs(acc).str() + " exceeds tolerance");
    }
    Envelope env = p.variant == Variant::Hermitian ? Envelope::DecayingQuartic
                                                   : Envelope::GrowingQuartic;
    return QesEigenfunction{p, energy, std::move(c), env};
}

inline QesEigenfunction eigenfunction(const QesProblem& p, const Real& energy,
                                      Real tol = Real(0)) {
    return eigenfunction(p, CReal(energy), std::move(tol));
}

/// max over the grid of |-psi'' + (V - E) psi| / max(1, |psi|), with the
/// derivatives taken analytically from the closed form (no differencing).
inline Real ode_residual(const QesEigenfunction& f, const std::vector<CReal>& grid) {
    using boost::multiprecision::abs;
    using boost::multiprecision::exp;
    if (grid.empty()) throw std::invalid_argument("ode_residual: empty grid");
    const QesProblem& p = f.problem;
    const Real fourJm1 = Real(4 * p.J - 1);
    Real worst(0);
    for (const CReal& x : grid) {
        CReal x2 = x * x;
        CReal g1, g2;  // g', g''
        CReal v;       // V(x)
        if (f.envelope == Envelope::DecayingQuartic) {
            g1 = -(x2 * x);
            g2 = -Real(3) * x2;
            v = x2 * x2 * x2 - fourJm1 * x2;
        } else {
            g1 = x2 * x + p.a * x;
            g2 = Real(3) * x2 + p.a;
            v = x2 * x2 * x2 + 2 * p.a * x2 * x2 + (fourJm1 + p.a * p.a) * x2;
        }
        // S = polynomial part in x, S' = 2x Q'(u), S'' = 2Q'(u) + 4x^2 Q''(u)
        CReal q0(Real(0)), q1(Real(0)), q2(Real(0));  // Q, Q', Q'' at u = x^2
        for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
            q2 = q2 * x2 + Real(2) * q1;
            q1 = q1 * x2 + q0;
            q0 = q0 * x2 + *it;
        }
        CReal S = q0;
        CReal S1 = Real(2) * x * q1;
        CReal S2 = Real(2) * q1 + Real(4) * x2 * q2;
        CReal T = (v - f.energy - g2 - g1 * g1) * S - Real(2) * g1 * S1 - S2;
        CReal geval = f.envelope_exponent(x);
        if (abs(geval.re) > Real("1e6"))
            throw Overflow("ode_residual: envelope exponent not representable at grid point");
        Real mag = exp(geval.re);
        Real num = mag * abs(T);
        Real den = (std::max)(Real(1), mag * abs(S));
        Real res = num / den;
        if (res > worst) worst = res;
    }
    return worst;
}

namespace detail {

/// Default validation grid for spectra: real points within the moderate-x
/// window where the envelope stays representable.
inline std::vector<CReal> default_residual_grid() {
    std::vector<CReal> g;
    for (int i = -4; i <= 4; ++i) g.emplace_back(Real(i) / 2, Real(0));
    return g;
}

} // namespace detail

/// All J quasi-exact eigenvalues, refined to `digits` significant digits.
/// An eigenvalue pair whose imaginary part falls below
/// 10^(-digits/2) * max(1, |E|) is classified as a coalesced (double) real
/// root; this explicit rule keeps the boundary search consistent.
inline Spectrum qes_spectrum(const QesProblem& p, unsigned digits = 30) {
    using boost::multiprecision::abs;
    if (digits < 15)
        throw std::invalid_argument("qes_spectrum: precision must be >= 15 digits");
    PrecisionGuard guard(digits + 12);
    TridiagonalRecursion rec = build_recursion(p);
    Polynomial<Real> chi = characteristic_polynomial(rec);

    std::vector<CReal> roots = all_roots_durand_kerner(chi);
    for (auto& z : roots) z = polish_root(chi, z, digits + 6);

    // convergence check: every root must satisfy the polynomial to the
    // half-precision scale that even a coalesced pair can reach
    const Real scale = max_abs_coeff(chi);
    const Real resid_tol = pow(Real(10), -static_cast<int>(digits / 2)) * scale;
    Real bound = root_bound(chi);
    for (const auto& z : roots) {
        Real pz = abs(chi(z));
        Real zscale = pow(1 + abs(z), static_cast<unsigned>(std::max(0, chi.degree())));
        if (pz > resid_tol * zscale)
            throw NonConvergence("qes_spectrum: root refinement stalled; raise precision");
        (void)bound;
    }

    const Real class_tol = pow(Real(10), -static_cast<int>(digits / 2));
    Spectrum s;
    std::vector<CReal> complex_side;
    for (const auto& z : roots) {
        if (abs(z.im) <= class_tol * (std::max)(Real(1), abs(z))) {
            s.real_values.push_back(z.re);
        } else {
            complex_side.push_back(z);
        }
    }
    // pair up conjugates; a leftover would mean an asymmetric classification,
    // so the closest-to-real leftover is demoted to real
    std::vector<CReal> pos, neg;
    for (const auto& z : complex_side) (z.im > 0 ? pos : neg).push_back(z);
    while (pos.size() != neg.size()) {
        auto& bigger = pos.size() > neg.size() ? pos : neg;
        auto it = std::min_element(bigger.begin(), bigger.end(),
                                   [](const CReal& a, const CReal& b) {
                                       return abs(a.im) < abs(b.im);
                                   });
        s.real_values.push_back(it->re);
        bigger.erase(it);
    }
    for (const auto& z : pos) {
        auto partner = std::min_element(neg.begin(), neg.end(),
                                        [&](const CReal& a, const CReal& b) {
                                            return abs(z - conj(a)) < abs(z - conj(b));
                                        });
        s.complex_pairs.emplace_back((z.re + partner->re) / 2, (z.im - partner->im) / 2);
        neg.erase(partner);
    }
    std::sort(s.real_values.begin(), s.real_values.end());
    std::sort(s.complex_pairs.begin(), s.complex_pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // validation: every level, real or complex, must solve the ODE in
    // closed form; record the worst residual over the default grid
    const auto grid = detail::default_residual_grid();
    Real worst(0);
    auto check = [&](const CReal& e) {
        QesEigenfunction f = eigenfunction(p, e, pow(Real(10), -static_cast<int>(digits / 3)));
        Real r = ode_residual(f, grid);
        if (r > worst) worst = r;
    };
    for (const auto& e : s.real_values) check(CReal(e));
    for (const auto& pr : s.complex_pairs) check(CReal(pr.first, pr.second));
    s.residual_bound = worst;
    return s;
}

} // namespace qes
