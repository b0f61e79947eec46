#pragma once

#include "qes/precision.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qes {

/// Dense univariate polynomial with coefficients in ascending degree.
/// T can be any commutative ring type (Real, ZInt, Rational, double,
/// or another Polynomial for bivariate work).
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(T v) { return Polynomial({std::move(v)}); }
    /// The monomial x.
    static Polynomial identity() { return Polynomial({T(0), T(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    const T& operator[](std::size_t i) const { return c_[i]; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    /// Horner evaluation; U may be a wider type than T (e.g. Complex<T>).
    template <typename U>
    U operator()(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) {
        std::vector<T> r(a.c_);
        for (auto& v : r) v = s * v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const T& s) { return s * a; }

    /// Multiply by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return zero();
        std::vector<T> r(c_.size() + k, T(0));
        std::copy(c_.begin(), c_.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

/// max |coefficient|; 0 for the zero polynomial. Floating T only.
template <typename T>
T max_abs_coeff(const Polynomial<T>& p) {
    using std::abs;
    using boost::multiprecision::abs;
    T m(0);
    for (const auto& c : p.coeffs()) {
        T a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

/// Scale so the largest coefficient magnitude is 1 (a positive scaling,
/// so signs and roots are unchanged). Floating T only.
template <typename T>
Polynomial<T> normalize_max(const Polynomial<T>& p) {
    T m = max_abs_coeff(p);
    if (m == 0) return p;
    std::vector<T> r(p.coeffs());
    for (auto& v : r) v = v / m;
    return Polynomial<T>(std::move(r));
}

/// Drop leading coefficients with |c| <= tol (floating T). Needed before
/// remainder sequences when coefficients carry roundoff.
template <typename T>
Polynomial<T> chop_leading(const Polynomial<T>& p, const T& tol) {
    using std::abs;
    using boost::multiprecision::abs;
    std::vector<T> r(p.coeffs());
    while (!r.empty() && abs(r.back()) <= tol) r.pop_back();
    return Polynomial<T>(std::move(r));
}

/// Euclidean division over a field-like T: returns (quotient, remainder).
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divrem(const Polynomial<T>& num,
                                               const Polynomial<T>& den) {
    std::vector<T> r(num.coeffs());
    const int dd = den.degree();
    std::vector<T> q(std::max<int>(0, num.degree() - dd + 1), T(0));
    for (int k = num.degree(); k >= dd; --k) {
        T f = r[static_cast<std::size_t>(k)] / den.leading();
        q[static_cast<std::size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] =
                r[static_cast<std::size_t>(k - dd + j)] - f * den[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(k)] = T(0);
    }
    return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

} // namespace qes
