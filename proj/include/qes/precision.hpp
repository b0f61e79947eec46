#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <utility>

namespace qes {

/// Arbitrary-precision real scalar. Precision is controlled in decimal
/// digits through Real::default_precision(); every entry point of the
/// library installs a PrecisionGuard before computing, so values created
/// inside a computation share one working precision.
using Real = boost::multiprecision::mpfr_float;

/// Exact integer and rational scalars for the exact-arithmetic routes.
using ZInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Scoped working precision (decimal digits). Restores the previous
/// default on destruction. The default is per thread, so parallel callers
/// install their own guards; all library entry points do this themselves.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// 10^(1 - working digits): the relative grid below which two numbers are
/// indistinguishable at the current default precision.
inline Real working_epsilon() {
    return pow(Real(10), -static_cast<int>(Real::default_precision()) + 1);
}

/// Minimal complex value over an arbitrary scalar. std::complex is only
/// specified for the builtin floating types, so the multiprecision paths
/// use this instead.
template <typename T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const T& s, const Complex& a) {
        return {s * a.re, s * a.im};
    }
    friend Complex operator*(const Complex& a, const T& s) { return s * a; }
    friend Complex operator/(const Complex& a, const T& s) {
        return {a.re / s, a.im / s};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        T d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d,
                (a.im * b.re - a.re * b.im) / d};
    }
    friend Complex operator+(const Complex& a, const T& s) {
        return {a.re + s, a.im};
    }
    friend Complex operator+(const T& s, const Complex& a) {
        return {s + a.re, a.im};
    }
    friend Complex operator-(const Complex& a, const T& s) {
        return {a.re - s, a.im};
    }
    friend Complex operator-(const T& s, const Complex& a) {
        return {s - a.re, -a.im};
    }

    Complex& operator+=(const Complex& b) { *this = *this + b; return *this; }
    Complex& operator-=(const Complex& b) { *this = *this - b; return *this; }
    Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }
};

template <typename T>
Complex<T> conj(const Complex<T>& z) { return {z.re, -z.im}; }

template <typename T>
T norm(const Complex<T>& z) { return z.re * z.re + z.im * z.im; }

template <typename T>
T abs(const Complex<T>& z) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    return sqrt(norm(z));
}

/// Principal square root.
template <typename T>
Complex<T> sqrt(const Complex<T>& z) {
    using std::sqrt;
    using boost::multiprecision::sqrt;
    T r = abs(z);
    if (r == 0) return {T(0), T(0)};
    T u = sqrt((r + z.re) / 2);
    if (u == 0) return {T(0), sqrt(r)};
    T v = z.im / (2 * u);
    if (z.re >= 0) return {u, v};
    // re < 0: express through the imaginary part to avoid cancellation
    T w = sqrt((r - z.re) / 2);
    if (z.im >= 0) return {z.im / (2 * w), w};
    return {-z.im / (2 * w), -w};
}

/// exp(z) for multiprecision scalars.
template <typename T>
Complex<T> exp(const Complex<T>& z) {
    using std::exp; using std::cos; using std::sin;
    using boost::multiprecision::exp;
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    T m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

using CReal = Complex<Real>;

} // namespace qes
