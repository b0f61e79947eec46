#pragma once

#include "qes/errors.hpp"
#include "qes/recursion.hpp"
#include "qes/spectrum.hpp"
#include "qes/sturm.hpp"

#include <utility>
#include <vector>

namespace qes {

enum class BoundaryMethod { SturmBisection, DiscriminantRoot };

/// One row of the critical-value table: the parameter t = a^2 at which the
/// real-root count of the characteristic polynomial transitions from J
/// (all levels real, unbroken symmetry) to J-2 (one conjugate pair).
struct CriticalBoundary {
    int J = 0;
    Real a_crit_sq;
    Real lo, hi;     // final bracket in t = a^2
    int digits = 0;  // achieved significant digits of a_crit_sq
    BoundaryMethod method = BoundaryMethod::SturmBisection;
};

namespace detail {

/// Real-root count of the degree-J characteristic polynomial at t = a^2,
/// evaluated at a = +sqrt(t); the spectral-reflection symmetry a -> -a
/// makes the count a function of t alone. Returns -1 when the chain
/// detects a repeated root (t sits numerically on the boundary).
inline int real_root_count_at(const PtRecursionForm& form, const Real& t) {
    Real a = sqrt(t);
    Polynomial<Real> chi = characteristic_polynomial(form.substitute(a));
    try {
        return count_real_roots(chi);
    } catch (const SquareFull&) {
        return -1;
    }
}

inline int achieved_digits(const Real& lo, const Real& hi, const Real& mid) {
    using boost::multiprecision::log10;
    if (hi <= lo) return static_cast<int>(Real::default_precision());
    Real rel = (hi - lo) / mid;
    return static_cast<int>(floor(-log10(rel)));
}

} // namespace detail

/// Locate [a_crit(J)]^2 by bisection on t = a^2 over the real-root count.
/// The bracket [0, 24J] is twice the asymptotic 12J slope, so it straddles
/// the transition for every supported J. Working precision is the target
/// plus two guard targets, since the coalescing pair costs half the
/// working digits (square-root splitting).
inline CriticalBoundary find_critical_a_squared(int J, unsigned target_digits = 12) {
    if (J == 1)
        throw NoTransition("find_critical_a_squared: J=1 has no transition (E=-a is real)");
    if (J < 1) throw std::invalid_argument("find_critical_a_squared: J must be >= 2");
    if (target_digits < 2)
        throw std::invalid_argument("find_critical_a_squared: need at least 2 digits");
    PrecisionGuard guard(3 * target_digits + 10);
    const PtRecursionForm form = derive_pt_recursion(J);

    Real lo(0), hi(24 * J);
    if (detail::real_root_count_at(form, hi) != J)
        throw NoTransition("find_critical_a_squared: count at t=24J is not J; "
                           "recursion is inconsistent");
    if (detail::real_root_count_at(form, lo) == J)
        throw NoTransition("find_critical_a_squared: already real at t=0");

    const Real tol = pow(Real(10), -static_cast<int>(target_digits));
    while (hi - lo > tol * (lo + hi) / 2) {
        Real mid = (lo + hi) / 2;
        // -1 (exact coalescence at mid) keeps the boundary inside [mid, hi]
        if (detail::real_root_count_at(form, mid) == J) hi = mid;
        else lo = mid;
    }
    CriticalBoundary out;
    out.J = J;
    out.lo = lo;
    out.hi = hi;
    out.a_crit_sq = (lo + hi) / 2;
    out.digits = detail::achieved_digits(lo, hi, out.a_crit_sq);
    out.method = BoundaryMethod::SturmBisection;
    return out;
}

/// Successive differences of a table covering consecutive J.
inline std::vector<Real> boundary_differences(const std::vector<CriticalBoundary>& table) {
    for (std::size_t i = 1; i < table.size(); ++i)
        if (table[i].J != table[i - 1].J + 1)
            throw std::invalid_argument("boundary_differences: table must cover consecutive J");
    std::vector<Real> out;
    for (std::size_t i = 1; i < table.size(); ++i)
        out.push_back(table[i].a_crit_sq - table[i - 1].a_crit_sq);
    return out;
}

/// Which two levels of the would-be-real (sorted) spectrum have merged
/// into the conjugate pair just below the boundary.
struct CollidingLevels {
    int lower_index = 0;  // sorted position of the lower partner (0-based)
    int upper_index = 0;
    bool at_upper_edge = false;  // pair sits at the top of the sorted spectrum
    bool at_lower_edge = false;
};

inline CollidingLevels identify_colliding_levels(int J, const Real& a_sq,
                                                 unsigned digits = 30) {
    using boost::multiprecision::abs;
    if (J < 2) throw std::invalid_argument("identify_colliding_levels: J must be >= 2");
    Spectrum s = qes_spectrum(QesProblem::pt(J, sqrt(a_sq)), digits);
    if (s.complex_pairs.empty())
        throw NotBroken("identify_colliding_levels: spectrum is entirely real here");
    // the most recently merged pair is the one closest to the real axis
    auto pair = std::min_element(s.complex_pairs.begin(), s.complex_pairs.end(),
                                 [](const auto& a, const auto& b) {
                                     return a.second < b.second;
                                 });
    int idx = 0;
    for (const auto& e : s.real_values)
        if (e < pair->first) ++idx;
    // account for other complex pairs sitting below this one
    for (const auto& p : s.complex_pairs)
        if (&p != &*pair && p.first < pair->first) idx += 2;
    CollidingLevels out;
    out.lower_index = idx;
    out.upper_index = idx + 1;
    out.at_lower_edge = (idx == 0);
    out.at_upper_edge = (idx + 1 == J - 1);
    return out;
}

} // namespace qes
