#pragma once

#include "qes/errors.hpp"
#include "qes/polynomial.hpp"
#include "qes/precision.hpp"
#include "qes/quadrature.hpp"
#include "qes/roots.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <vector>

namespace qes {

/// Double-turning-point factorization of the scaled classical polynomial:
/// the choice of (alpha, beta, F) for which
///     y^6 + 2b y^4 + (b^2+4) y^2 - F = (y^2-alpha)^2 (y^2-beta).
/// Demanding a double turning point encodes the level coalescence that
/// marks the symmetry boundary in the scaling limit.
struct WkbFactorization {
    Real b;
    Real alpha;
    Real beta;
    Real F;
};

/// Solve the factorization constraints at given b:
/// 3 alpha = -2b - sqrt(b^2-12), 3 beta = -2b + 2 sqrt(b^2-12), F = alpha^2 beta.
/// Requires b^2 >= 12 for a real radical (values a working-epsilon below
/// 12 are clamped so the critical point itself is representable).
inline WkbFactorization factorization_from_b(const Real& b) {
    Real rad = b * b - 12;
    if (rad < 0) {
        if (rad > -working_epsilon() * 100) rad = 0;
        else throw ComplexRegime("factorization_from_b: b^2 < 12 has no real factorization");
    }
    Real root = sqrt(rad);
    WkbFactorization out;
    out.b = b;
    out.alpha = (-2 * b - root) / 3;
    out.beta = (-2 * b + 2 * root) / 3;
    out.F = out.alpha * out.alpha * out.beta;
    return out;
}

/// Closed form for the scaled energy: F = -(2/27)(b - sqrt(b^2-12))(2b + sqrt(b^2-12))^2.
/// Equals alpha^2 beta from the factorization; kept as a separate route so
/// the algebra can be cross-checked.
inline Real scaled_energy_closed_form(const Real& b) {
    Real rad = b * b - 12;
    if (rad < 0) {
        if (rad > -working_epsilon() * 100) rad = 0;
        else throw ComplexRegime("scaled_energy_closed_form: b^2 < 12");
    }
    Real root = sqrt(rad);
    return -Real(2) / 27 * (b - root) * (2 * b + root) * (2 * b + root);
}

/// The scaled quantization integral
///     I(b, F) = int dy sqrt(F - [y^6 + 2b y^4 + (b^2+4) y^2])
/// over the classically allowed interval [-sqrt(beta_max), +sqrt(beta_max)].
/// The integration range is split at every interior turning point, and each
/// piece is handled by tanh-sinh quadrature, so the square-root endpoint
/// behavior costs nothing.
inline Real quantization_integral(const Real& b, const Real& F, const Real& quad_tolerance) {
    PrecisionGuard guard((std::max)(Real::default_precision(),
                                    static_cast<unsigned>(30)));
    // turning points: real roots of z^3 + 2b z^2 + (b^2+4) z - F, z = y^2
    Polynomial<Real> cubic{-F, b * b + 4, 2 * b, Real(1)};
    Real bound = root_bound(cubic);
    std::vector<Real> zs;
    try {
        auto brackets = isolate_real_roots(cubic, -bound, bound);
        for (const auto& br : brackets)
            zs.push_back(refine_bracketed_root(cubic, br.first, br.second,
                                               Real::default_precision() - 5));
    } catch (const SquareFull&) {
        // double root: fall back to the full complex pass
        for (const auto& z : all_roots_durand_kerner(cubic))
            if (abs(z.im) < pow(Real(10), -static_cast<int>(Real::default_precision() / 3)))
                zs.push_back(z.re);
    }
    std::vector<Real> positive;
    for (const auto& z : zs)
        if (z > working_epsilon()) positive.push_back(z);
    if (positive.empty())
        throw NoRealTurningPoints("quantization_integral: no positive turning point");
    std::sort(positive.begin(), positive.end());

    std::vector<Real> knots{Real(0)};
    for (const auto& z : positive) knots.push_back(sqrt(z));

    auto integrand = [&](const Real& y) -> Real {
        Real y2 = y * y;
        Real q = F - (y2 * y2 * y2 + 2 * b * y2 * y2 + (b * b + 4) * y2);
        if (q <= 0) return Real(0);  // tangency / roundoff at turning points
        return sqrt(q);
    };
    // reject a genuinely negative integrand between consecutive knots
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        Real ymid = (knots[i] + knots[i + 1]) / 2;
        Real y2 = ymid * ymid;
        Real q = F - (y2 * y2 * y2 + 2 * b * y2 * y2 + (b * b + 4) * y2);
        if (q < -quad_tolerance * (1 + abs(F)))
            throw NegativeIntegrand("quantization_integral: classically forbidden band "
                                    "inside the integration range; wrong (b, F) pairing");
    }
    Real total(0);
    const Real piece_tol = quad_tolerance / (2 * static_cast<int>(knots.size()));
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        total += tanh_sinh(integrand, knots[i], knots[i + 1], piece_tol);
    return 2 * total;  // even integrand: double the [0, sqrt(beta_max)] half
}

/// Solve I(b, F(b)) = 2 pi along the factorization family. The domain
/// edge b^2 = 12 is exactly the critical point, so the search is run as a
/// golden-section minimization of |I - 2 pi| over t = b^2 in [12, 36]
/// (b < 0 gives the positive turning points); NoRoot if the best residual
/// does not vanish to quadrature accuracy.
inline Real wkb_boundary_constant(const Real& search_tolerance) {
    PrecisionGuard guard(40);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    const Real quad_tol("1e-16");
    auto objective = [&](const Real& t) -> Real {
        Real b = -sqrt(t);
        auto fac = factorization_from_b(b);
        return abs(quantization_integral(b, fac.F, quad_tol) - two_pi);
    };
    Real lo(12), hi(36);
    const Real gr = (sqrt(Real(5)) - 1) / 2;
    Real x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    Real f1 = objective(x1), f2 = objective(x2);
    while (hi - lo > search_tolerance / 4) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = objective(x2);
        }
    }
    Real t_best = (lo + hi) / 2;
    // prefer the domain edge if the bracket has collapsed onto it
    if (objective(Real(12)) <= (std::min)(f1, f2)) t_best = 12;
    if (objective(t_best) > Real("1e-6"))
        throw NoRoot("wkb_boundary_constant: quantization residual does not vanish "
                     "inside b in [-6, -sqrt(12)]");
    return -sqrt(t_best);
}

/// Predicted magnitude of the extreme quasi-exact level at the boundary:
/// E_J ~ (64 sqrt(3) / 9) J^(3/2).
inline Real asymptotic_energy(int J) {
    if (J < 1) throw std::invalid_argument("asymptotic_energy: J must be >= 1");
    Real j(J);
    return Real(64) * sqrt(Real(3)) / 9 * j * sqrt(j);
}

} // namespace qes
