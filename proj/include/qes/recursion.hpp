#pragma once

#include "qes/errors.hpp"
#include "qes/precision.hpp"

#include <stdexcept>
#include <vector>

namespace qes {

enum class Variant { Hermitian, PtSymmetric };

/// One Hamiltonian instance of the sextic quasi-exactly-solvable family:
///   Hermitian:    H = p^2 + x^6 - (4J-1) x^2                (a unused)
///   PtSymmetric:  H = p^2 + x^6 + 2a x^4 + (4J-1+a^2) x^2
/// J counts the even-parity levels available in closed form.
struct QesProblem {
    int J;
    Real a;
    Variant variant;

    QesProblem(int J_, Real a_, Variant v) : J(J_), a(std::move(a_)), variant(v) {
        if (J < 1) throw std::invalid_argument("QesProblem: J must be >= 1");
        if (variant == Variant::Hermitian && a != 0)
            throw std::invalid_argument(
                "QesProblem: the Hermitian family has no parameter a; pass a = 0");
    }

    static QesProblem hermitian(int J) { return {J, Real(0), Variant::Hermitian}; }
    static QesProblem pt(int J, Real a) { return {J, std::move(a), Variant::PtSymmetric}; }
};

/// Three-term recursion on the polynomial coefficients c_0..c_{J-1}
/// (with c_{-1} = c_J = 0). Row k reads
///
///     sub[k-1]*c_{k-1} + (diag[k] - energy_sign*E)*c_k + sup[k]*c_{k+1} = 0,
///
/// i.e. the coefficient multiplying c_k is diag[k] - energy_sign*E.
/// Hermitian rows carry energy_sign = -1 so that they read exactly
///     4(J-k) c_{k-1} + E c_k + 2(k+1)(2k+1) c_{k+1} = 0,
/// and the PT-symmetric rows carry energy_sign = +1:
///     4(J-k) c_{k-1} - (E + a(4k+1)) c_k - (2k+2)(2k+1) c_{k+1} = 0.
struct TridiagonalRecursion {
    int size = 0;
    std::vector<Real> sub;   // length size-1, sub[k-1] multiplies c_{k-1} in row k
    std::vector<Real> diag;  // length size
    std::vector<Real> sup;   // length size-1, sup[k] multiplies c_{k+1} in row k
    int energy_sign = 1;     // s in (diag[k] - s*E)

    /// Entries of the matrix M with E c = M c (rows divided by energy_sign):
    /// M[k][k] = s*diag[k], M[k][k-1] = s*sub[k-1], M[k][k+1] = s*sup[k].
    Real matrix_diag(int k) const { return Real(energy_sign) * diag[static_cast<std::size_t>(k)]; }
    Real matrix_sub(int k) const { return Real(energy_sign) * sub[static_cast<std::size_t>(k - 1)]; }
    Real matrix_sup(int k) const { return Real(energy_sign) * sup[static_cast<std::size_t>(k)]; }
};

/// The PT recursion with the dependence on a kept symbolic: row k is
///
///     sub[k-1]*c_{k-1} - (E + a*diag_a[k])*c_k + sup[k]*c_{k+1} = 0
///
/// with integer tables sub[k-1] = 4(J-k), diag_a[k] = 4k+1,
/// sup[k] = -(2k+2)(2k+1). Obtained by substituting the eigenfunction
/// ansatz exp(x^4/4 + a x^2/2) * sum_k c_k x^{2k} into the Schroedinger
/// equation; the derivation is checked against an independent
/// symbolic-substitution oracle in the test suite.
struct PtRecursionForm {
    int J = 0;
    std::vector<long> sub;     // 4(J-k), k = 1..J-1
    std::vector<long> diag_a;  // 4k+1,   k = 0..J-1 (multiplies -a)
    std::vector<long> sup;     // -(2k+2)(2k+1), k = 0..J-2

    TridiagonalRecursion substitute(const Real& a) const {
        TridiagonalRecursion r;
        r.size = J;
        r.energy_sign = +1;
        r.sub.reserve(sub.size());
        r.sup.reserve(sup.size());
        r.diag.reserve(diag_a.size());
        for (long v : sub) r.sub.emplace_back(v);
        for (long v : diag_a) r.diag.emplace_back(-a * v);
        for (long v : sup) r.sup.emplace_back(v);
        return r;
    }
};

/// Build the PT-variant recursion for given J, symbolic in a.
inline PtRecursionForm derive_pt_recursion(int J) {
    if (J < 1) throw std::invalid_argument("derive_pt_recursion: J must be >= 1");
    PtRecursionForm f;
    f.J = J;
    for (int k = 1; k <= J - 1; ++k) f.sub.push_back(4L * (J - k));
    for (int k = 0; k <= J - 1; ++k) f.diag_a.push_back(4L * k + 1);
    for (int k = 0; k <= J - 2; ++k) f.sup.push_back(-(2L * k + 2) * (2L * k + 1));
    return f;
}

/// Numeric recursion for one problem instance.
inline TridiagonalRecursion build_recursion(const QesProblem& p) {
    if (p.variant == Variant::PtSymmetric)
        return derive_pt_recursion(p.J).substitute(p.a);
    TridiagonalRecursion r;
    r.size = p.J;
    r.energy_sign = -1;
    for (int k = 1; k <= p.J - 1; ++k) r.sub.emplace_back(4 * (p.J - k));
    for (int k = 0; k <= p.J - 1; ++k) r.diag.emplace_back(0);
    for (int k = 0; k <= p.J - 2; ++k) r.sup.emplace_back(2 * (k + 1) * (2 * k + 1));
    return r;
}

} // namespace qes
