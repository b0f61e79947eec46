#pragma once

// Differential-equation-level verification, independent of the recursion
// algebra: integrate the Schroedinger equation inward along rays in the
// Stokes wedges where the bound state decays, and measure how well the
// even-parity matching condition psi'(0) = 0 is satisfied.

#include "qes/errors.hpp"
#include "qes/precision.hpp"
#include "qes/quadrature.hpp"
#include "qes/recursion.hpp"
#include "qes/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace qes {

/// Integration ray x = s e^{i angle}, s in [0, r_max].
struct Ray {
    double angle = 0;   // argument of x in radians
    double r_max = 6;   // truncation radius
    int steps = 2000;   // initial step-count hint for the adaptive integrator
};

namespace shooting_detail {

constexpr double pi_d = 3.141592653589793238462643383279502884;

inline bool in_wedge(double angle, double center_deg) {
    double deg = angle * 180.0 / pi_d;
    double d = deg - center_deg;
    while (d > 180) d -= 360;
    while (d < -180) d += 360;
    return std::abs(d) < 22.5;
}

inline void validate_ray(const QesProblem& p, const Ray& right, const Ray& left) {
    if (p.variant == Variant::PtSymmetric) {
        if (!in_wedge(right.angle, -45) || !in_wedge(left.angle, -135))
            throw std::invalid_argument(
                "shoot: rays must lie inside the wedges centered at -45 and -135 degrees");
    } else {
        if (!in_wedge(right.angle, 0) || !in_wedge(left.angle, 180))
            throw std::invalid_argument(
                "shoot: rays must lie inside the wedges centered at 0 and 180 degrees");
    }
}

struct RayEndpoint {
    std::complex<double> value;        // psi(0)
    std::complex<double> derivative;   // d psi / dx at 0
    double amplification_log = 0;      // ln of the worst error amplification
    // state at the magnitude peak along the ray: the healthiest matching
    // point (matching at the origin through an interior barrier is
    // hypersensitive for near-degenerate tunneling doublets)
    double peak_s = 0;
    std::complex<double> peak_value;
    std::complex<double> peak_dds{1.0, 0.0};  // d psi / ds at the peak
};

/// Scalar plumbing so the integrator runs in long double or
/// multiprecision complex arithmetic with the same stepping.
template <typename C>
struct ray_scalar;

template <>
struct ray_scalar<std::complex<long double>> {
    using C = std::complex<long double>;
    using R = long double;
    static C make(double re, double im) {
        return {static_cast<long double>(re), static_cast<long double>(im)};
    }
    static C from_real(const R& v) { return {v, 0.0L}; }
    static R real_from_double(double v) { return static_cast<long double>(v); }
    static double real_to_double(const R& v) { return static_cast<double>(v); }
    static double abs_d(const C& z) { return static_cast<double>(std::abs(z)); }
    static std::complex<double> to_cd(const C& z) {
        return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
};

template <>
struct ray_scalar<Complex<Real>> {
    using C = Complex<Real>;
    using R = Real;
    static C make(double re, double im) { return {Real(re), Real(im)}; }
    static C from_real(const R& v) { return {v, Real(0)}; }
    static R real_from_double(double v) { return Real(v); }
    static double real_to_double(const R& v) { return v.convert_to<double>(); }
    static double abs_d(const C& z) {
        Real a = abs(z);
        if (a > Real("1e300")) return 1e300;
        return a.convert_to<double>();
    }
    static std::complex<double> to_cd(const C& z) {
        return {z.re.convert_to<double>(), z.im.convert_to<double>()};
    }
};

/// Integrate psi'' = e^{2 i theta} (V - E) psi from s = r_max down to 0
/// with the decaying-envelope initialization. Fourth-order steps on a
/// smoothly graded grid h(s) ~ target / sqrt(|V - E|): smooth grading
/// matters, because step-size jumps act as impulses that excite the
/// subdominant solution, and any error injected early is amplified by the
/// ratio of the fastest-growing local solution to the tracked one. That
/// amplification exponent is measured along the way (integral of |Re
/// sqrt(e^{2i theta}(V-E))| minus the tracked growth) so the caller can
/// tell whether the arithmetic carried enough digits.
template <typename C>
RayEndpoint integrate_ray_impl(const QesProblem& p, std::complex<double> E,
                               const Ray& ray, double rel_tol) {
    using traits = ray_scalar<C>;
    using R = typename traits::R;
    const double a = p.a.convert_to<double>();
    const double fourJm1 = 4.0 * p.J - 1;
    const std::complex<double> phase_d = std::polar(1.0, ray.angle);
    const C phase = traits::make(phase_d.real(), phase_d.imag());
    const C phase2 = phase * phase;
    const C energy = traits::make(E.real(), E.imag());
    const C a_c = traits::from_real(traits::real_from_double(a));
    const C fourJm1_c = traits::from_real(traits::real_from_double(fourJm1));
    const bool hermitian = p.variant == Variant::Hermitian;

    // the ray parameter is carried in the state's own scalar type: the
    // position error of a double-kept grid, amplified like any other early
    // perturbation, is exactly what buries the matching residual
    auto rhs = [&](const R& s, const C& psi) -> C {
        C x = traits::from_real(s) * phase;
        C x2 = x * x;
        C v = hermitian ? x2 * x2 * x2 - fourJm1_c * x2
                        : x2 * x2 * x2 + traits::from_real(traits::real_from_double(2.0)) * a_c * x2 * x2 +
                              (fourJm1_c + a_c * a_c) * x2;
        return phase2 * (v - energy) * psi;
    };
    // local rates: |lambda| grades the grid, |Re lambda| drives the
    // error-amplification bookkeeping (grid choice itself may be sloppy)
    auto local_rates = [&](double s, double& mod, double& re_part) {
        std::complex<double> x = s * phase_d;
        std::complex<double> x2 = x * x;
        std::complex<double> v =
            hermitian ? x2 * x2 * x2 - fourJm1 * x2
                      : x2 * x2 * x2 + 2.0 * a * x2 * x2 + (fourJm1 + a * a) * x2;
        std::complex<double> lam = std::sqrt(phase_d * phase_d * (v - E));
        mod = std::abs(lam);
        re_part = std::abs(lam.real());
    };
    const R two_r = traits::real_from_double(2.0);
    const R six_r = traits::real_from_double(6.0);
    auto step_rk4 = [&](const R& s, const R& h, C y[2]) {
        const R sh = s + h / two_r;
        const R se = s + h;
        const C h_c = traits::from_real(h);
        const C half_h = traits::from_real(h / two_r);
        const C sixth = traits::from_real(h / six_r);
        const C two = traits::from_real(two_r);
        C k1[2] = {y[1], rhs(s, y[0])};
        C k2[2] = {y[1] + half_h * k1[1], rhs(sh, y[0] + half_h * k1[0])};
        C k3[2] = {y[1] + half_h * k2[1], rhs(sh, y[0] + half_h * k2[0])};
        C k4[2] = {y[1] + h_c * k3[1], rhs(se, y[0] + h_c * k3[0])};
        y[0] = y[0] + sixth * (k1[0] + two * k2[0] + two * k3[0] + k4[0]);
        y[1] = y[1] + sixth * (k1[1] + two * k2[1] + two * k3[1] + k4[1]);
    };

    // local phase/growth per step: rel_tol ~ (lambda h)^5 / 1920
    const double lam_h = std::clamp(std::pow(1920.0 * rel_tol, 0.2), 0.002, 0.05);
    const double h_coarse = ray.r_max / std::max(16, ray.steps);
    const double h_min = ray.r_max * 1e-14;

    // envelope exponent derivative at the start point: g' = x^3 + a x (PT,
    // decaying in the lower wedges) or -x^3 (Hermitian, decaying on the axis)
    C x0 = traits::from_real(traits::real_from_double(ray.r_max)) * phase;
    C g1 = hermitian ? -(x0 * x0 * x0) : x0 * x0 * x0 + a_c * x0;
    C y[2] = {traits::from_real(traits::real_from_double(1.0)), g1 * phase};

    R s = traits::real_from_double(ray.r_max);
    double log_total = 0, amplification = 0;
    double prev_log = 0;  // log|psi| at the previous step (start value 1)
    double best_log = -1e308;
    RayEndpoint out;
    while (s > 0) {
        double sd = traits::real_to_double(s);
        double mod, re_part;
        local_rates(sd, mod, re_part);
        double hd = std::min(lam_h / (0.5 + mod), h_coarse);
        if (hd < h_min)
            throw StiffnessFailure("shoot: graded step underflow; reduce r_max");
        R h = traits::real_from_double(hd);
        if (s - h < 0) h = s;
        step_rk4(s, -h, y);
        s -= h;
        double mag = traits::abs_d(y[0]);
        if (!std::isfinite(mag) || !std::isfinite(traits::abs_d(y[1])))
            throw StiffnessFailure("shoot: state left the representable range; "
                                   "reduce r_max or the problem scale");
        // amplification: how much faster the fastest local solution grew
        // than the tracked one, accumulated only where it exceeds it
        double cur_log = log_total + std::log(std::max(mag, 1e-300));
        amplification += std::max(0.0, re_part * traits::real_to_double(h) -
                                           (cur_log - prev_log));
        prev_log = cur_log;
        if (cur_log > best_log) {
            best_log = cur_log;
            out.peak_s = traits::real_to_double(s);
            out.peak_value = traits::to_cd(y[0]);
            out.peak_dds = traits::to_cd(y[1]);
        }
        // renormalize: the equation is linear and only ratios matter
        if (mag > 1e120) {
            C inv = traits::from_real(traits::real_from_double(1.0 / mag));
            y[0] = inv * y[0];
            y[1] = inv * y[1];
            log_total += std::log(mag);
        }
    }
    out.value = traits::to_cd(y[0]);
    out.derivative = traits::to_cd(y[1] / phase);
    out.amplification_log = amplification;
    return out;
}

/// Outward companion: the exactly-even solution (psi, psi')(0) = (1, 0)
/// integrated from the origin to s_target along the same ray grading.
/// Returns (psi, d psi/ds) at s_target.
template <typename C>
std::pair<std::complex<double>, std::complex<double>>
integrate_even_outward(const QesProblem& p, std::complex<double> E, const Ray& ray,
                       double s_target, double rel_tol) {
    using traits = ray_scalar<C>;
    using R = typename traits::R;
    const double a = p.a.convert_to<double>();
    const double fourJm1 = 4.0 * p.J - 1;
    const std::complex<double> phase_d = std::polar(1.0, ray.angle);
    const C phase = traits::make(phase_d.real(), phase_d.imag());
    const C phase2 = phase * phase;
    const C energy = traits::make(E.real(), E.imag());
    const C a_c = traits::from_real(traits::real_from_double(a));
    const C fourJm1_c = traits::from_real(traits::real_from_double(fourJm1));
    const bool hermitian = p.variant == Variant::Hermitian;
    auto rhs = [&](const R& s, const C& psi) -> C {
        C x = traits::from_real(s) * phase;
        C x2 = x * x;
        C v = hermitian ? x2 * x2 * x2 - fourJm1_c * x2
                        : x2 * x2 * x2 + traits::from_real(traits::real_from_double(2.0)) * a_c * x2 * x2 +
                              (fourJm1_c + a_c * a_c) * x2;
        return phase2 * (v - energy) * psi;
    };
    auto local_rate = [&](double s) -> double {
        std::complex<double> x = s * phase_d;
        std::complex<double> x2 = x * x;
        std::complex<double> v =
            hermitian ? x2 * x2 * x2 - fourJm1 * x2
                      : x2 * x2 * x2 + 2.0 * a * x2 * x2 + (fourJm1 + a * a) * x2;
        return std::abs(std::sqrt(phase_d * phase_d * (v - E)));
    };
    const R two_r = traits::real_from_double(2.0);
    const R six_r = traits::real_from_double(6.0);
    auto step_rk4 = [&](const R& s, const R& h, C y[2]) {
        const R sh = s + h / two_r;
        const R se = s + h;
        const C h_c = traits::from_real(h);
        const C half_h = traits::from_real(h / two_r);
        const C sixth = traits::from_real(h / six_r);
        const C two = traits::from_real(two_r);
        C k1[2] = {y[1], rhs(s, y[0])};
        C k2[2] = {y[1] + half_h * k1[1], rhs(sh, y[0] + half_h * k1[0])};
        C k3[2] = {y[1] + half_h * k2[1], rhs(sh, y[0] + half_h * k2[0])};
        C k4[2] = {y[1] + h_c * k3[1], rhs(se, y[0] + h_c * k3[0])};
        y[0] = y[0] + sixth * (k1[0] + two * k2[0] + two * k3[0] + k4[0]);
        y[1] = y[1] + sixth * (k1[1] + two * k2[1] + two * k3[1] + k4[1]);
    };
    const double lam_h = std::clamp(std::pow(1920.0 * rel_tol, 0.2), 0.002, 0.05);
    const double h_coarse = ray.r_max / std::max(16, ray.steps);
    C y[2] = {traits::from_real(traits::real_from_double(1.0)),
              traits::from_real(traits::real_from_double(0.0))};
    R s = traits::real_from_double(0.0);
    const R target = traits::real_from_double(s_target);
    while (s < target) {
        double sd = traits::real_to_double(s);
        double hd = std::min(lam_h / (0.5 + local_rate(sd)), h_coarse);
        R h = traits::real_from_double(hd);
        if (s + h > target) h = target - s;
        step_rk4(s, h, y);
        s += h;
        double mag = traits::abs_d(y[0]);
        if (!std::isfinite(mag))
            throw StiffnessFailure("shoot: outward state left the representable range");
        // only the direction of (psi, psi') matters to the matching
        if (mag > 1e120) {
            C inv = traits::from_real(traits::real_from_double(1.0 / mag));
            y[0] = inv * y[0];
            y[1] = inv * y[1];
        }
    }
    return {traits::to_cd(y[0]), traits::to_cd(y[1])};
}

/// Even-parity matching and cross-ray consistency at the origin. The two
/// decaying solutions must be one and the same even function, so both the
/// derivative condition and their mutual Wronskian vanish at eigenvalues.
inline double compose_residual(const RayEndpoint& r1, const RayEndpoint& r2) {
    double v = std::max(std::abs(r1.value), std::abs(r2.value));
    double d = std::max(std::abs(r1.derivative), std::abs(r2.derivative));
    double even = d / (v + d + 1e-300);
    double w = std::abs(r1.value * r2.derivative - r2.value * r1.derivative);
    double wn = w / ((std::abs(r1.value) + std::abs(r1.derivative)) *
                         (std::abs(r2.value) + std::abs(r2.derivative)) +
                     1e-300);
    return std::max(even, wn);
}

/// Matching residual on a single ray: the inward decaying solution against
/// the exactly-even outward solution, matched at the magnitude peak. Falls
/// back to the origin condition when the peak is the origin itself.
template <typename C>
double ray_match_residual(const QesProblem& p, std::complex<double> E, const Ray& ray,
                          double rel_tol, double* amplification = nullptr) {
    RayEndpoint in = integrate_ray_impl<C>(p, E, ray, rel_tol);
    if (amplification) *amplification = in.amplification_log;
    if (in.peak_s <= ray.r_max * 1e-12) {
        double v = std::abs(in.value), d = std::abs(in.derivative);
        return d / (v + d + 1e-300);
    }
    auto [ov, od] = integrate_even_outward<C>(p, E, ray, in.peak_s, rel_tol);
    std::complex<double> w = in.peak_value * od - in.peak_dds * ov;
    double scale = (std::abs(in.peak_value) + std::abs(in.peak_dds)) *
                       (std::abs(ov) + std::abs(od)) +
                   1e-300;
    return std::abs(w) / scale;
}

} // namespace shooting_detail

/// Rays at the wedge centers with the truncation-radius heuristic
/// r_max >= (|E| + 4J)^(1/4) + margin.
inline std::pair<Ray, Ray> default_rays(const QesProblem& p, std::complex<double> E,
                                        double margin = 2.5) {
    double r = std::pow(std::abs(E) + 4.0 * p.J, 0.25) + margin;
    using shooting_detail::pi_d;
    if (p.variant == Variant::PtSymmetric)
        return {Ray{-pi_d / 4, r, 2000}, Ray{-3 * pi_d / 4, r, 2000}};
    return {Ray{0.0, r, 2000}, Ray{pi_d, r, 2000}};
}

/// Normalized matching residual at the origin. Near zero iff E is an
/// eigenvalue under the wedge boundary conditions: both ray solutions must
/// satisfy the even-parity condition psi'(0) = 0, and their Wronskian must
/// vanish (they are then the same solution).
inline double shoot_eigenvalue_residual(const QesProblem& p, std::complex<double> E,
                                        const Ray& right, const Ray& left) {
    using namespace shooting_detail;
    validate_ray(p, right, left);
    if (p.variant == Variant::Hermitian) {
        // parity maps the two axis rays onto each other, so the cross-ray
        // condition is vacuous; the discriminating condition is even
        // matching per ray, taken at the peak to stay robust for deep
        // tunneling doublets
        auto one_ray = [&](const Ray& ray) {
            double amp = 0;
            double r = ray_match_residual<std::complex<long double>>(p, E, ray, 1e-12, &amp);
            bool escalate = r < 1e-3 || amp / 2.302585 + 10 > 18;
            if (!escalate) return r;
            unsigned digits = static_cast<unsigned>(std::max(34.0, amp / 2.302585 + 16));
            PrecisionGuard guard(digits);
            return ray_match_residual<Complex<Real>>(p, E, ray, 1e-15);
        };
        return std::max(one_ray(right), one_ray(left));
    }
    // lower-wedge rays are not parity images of each other, so the full
    // condition is that both decaying solutions continue to one even
    // function at the origin; near-eigenvalue results are re-derived in
    // multiprecision because the deepest levels amplify early errors
    auto r1 = integrate_ray_impl<std::complex<long double>>(p, E, right, 1e-12);
    auto r2 = integrate_ray_impl<std::complex<long double>>(p, E, left, 1e-12);
    double res = compose_residual(r1, r2);
    double amp = std::max(r1.amplification_log, r2.amplification_log);
    bool escalate = res < 1e-3 || amp / 2.302585 + 10 > 18;
    if (!escalate) return res;
    unsigned digits = static_cast<unsigned>(std::max(34.0, amp / 2.302585 + 16));
    PrecisionGuard guard(digits);
    auto m1 = integrate_ray_impl<Complex<Real>>(p, E, right, 1e-15);
    auto m2 = integrate_ray_impl<Complex<Real>>(p, E, left, 1e-15);
    return compose_residual(m1, m2);
}

inline double shoot_eigenvalue_residual(const QesProblem& p, std::complex<double> E) {
    auto rays = default_rays(p, E);
    return shoot_eigenvalue_residual(p, E, rays.first, rays.second);
}

/// The linearly independent partner of a closed-form state on a real
/// interval, by reduction of order:
///     psi_bad(x) = psi_good(x) * ( int^x ds psi_good(s)^{-2} + C ).
/// With this normalization the Wronskian of the pair is exactly 1; the
/// sampled Wronskian (finite differences across the quadrature-built
/// integral) certifies the construction numerically.
struct SolutionPair {
    std::vector<Real> xs;
    std::vector<Real> good_vals;
    std::vector<Real> bad_vals;
    Real wronskian;          // mean of the sampled Wronskian
    Real wronskian_max_dev;  // max |W - 1| over the samples
};

inline SolutionPair bad_solution(const QesEigenfunction& good, const Real& C,
                                 std::pair<Real, Real> interval, int n_samples = 33) {
    using boost::multiprecision::abs;
    using boost::multiprecision::exp;
    if (n_samples < 3) throw std::invalid_argument("bad_solution: need >= 3 samples");
    if (abs(good.energy.im) > working_epsilon() * 1000)
        throw std::invalid_argument("bad_solution: real interval requires a real-energy state");
    PrecisionGuard guard(40);
    const auto [x_lo, x_hi] = interval;
    if (!(x_hi > x_lo)) throw std::invalid_argument("bad_solution: empty interval");

    auto psi = [&](const Real& x) -> Real {
        CReal v = good(CReal(x, Real(0)));
        return v.re;
    };
    auto dpsi = [&](const Real& x) -> Real {
        // psi' = (g' P + P') e^g with P the polynomial part in x
        CReal cx(x, Real(0));
        CReal x2 = cx * cx;
        CReal g1 = good.envelope == Envelope::DecayingQuartic
                       ? -(x2 * cx)
                       : x2 * cx + good.problem.a * cx;
        CReal q0(Real(0)), q1(Real(0));
        for (auto it = good.coeffs.rbegin(); it != good.coeffs.rend(); ++it) {
            q1 = q1 * x2 + q0;
            q0 = q0 * x2 + *it;
        }
        CReal S1 = Real(2) * cx * q1;
        CReal val = (g1 * q0 + S1) * exp(good.envelope_exponent(cx));
        return val.re;
    };

    // node guard: compare against neighbors, not the global max, since the
    // envelope can span many orders of magnitude across the interval
    {
        const int probe = 64 * n_samples;
        std::vector<Real> vals(static_cast<std::size_t>(probe) + 1);
        for (int i = 0; i <= probe; ++i) {
            Real x = x_lo + (x_hi - x_lo) * i / probe;
            vals[static_cast<std::size_t>(i)] = psi(x);
        }
        for (int i = 0; i <= probe; ++i) {
            if (i > 0 && (vals[static_cast<std::size_t>(i)] > 0) !=
                             (vals[static_cast<std::size_t>(i - 1)] > 0))
                throw NodeInInterval("bad_solution: psi_good changes sign inside the interval");
            Real neighbor = i == 0 ? abs(vals[1])
                                   : (i == probe ? abs(vals[static_cast<std::size_t>(probe - 1)])
                                                 : (std::max)(abs(vals[static_cast<std::size_t>(i - 1)]),
                                                              abs(vals[static_cast<std::size_t>(i + 1)])));
            if (abs(vals[static_cast<std::size_t>(i)]) < neighbor * Real("1e-10"))
                throw NodeInInterval("bad_solution: psi_good vanishes inside the interval");
        }
    }

    auto inv_sq = [&](const Real& x) -> Real {
        Real v = psi(x);
        return 1 / (v * v);
    };

    SolutionPair out;
    out.xs.resize(static_cast<std::size_t>(n_samples));
    out.good_vals.resize(static_cast<std::size_t>(n_samples));
    out.bad_vals.resize(static_cast<std::size_t>(n_samples));
    std::vector<Real> u(static_cast<std::size_t>(n_samples));
    const Real quad_tol("1e-25");
    Real acc(0);
    for (int i = 0; i < n_samples; ++i) {
        Real x = x_lo + (x_hi - x_lo) * i / (n_samples - 1);
        out.xs[static_cast<std::size_t>(i)] = x;
        if (i > 0)
            acc += tanh_sinh(inv_sq, out.xs[static_cast<std::size_t>(i - 1)], x, quad_tol);
        u[static_cast<std::size_t>(i)] = acc;
        out.good_vals[static_cast<std::size_t>(i)] = psi(x);
        out.bad_vals[static_cast<std::size_t>(i)] =
            out.good_vals[static_cast<std::size_t>(i)] * (acc + C);
    }

    // sampled Wronskian via central differences across the built integral
    const Real h = (x_hi - x_lo) * Real("1e-7");
    Real mean(0), worst(0);
    for (int i = 0; i < n_samples; ++i) {
        Real x = out.xs[static_cast<std::size_t>(i)];
        if (x - h < x_lo || x + h > x_hi) {
            Real w = out.good_vals[static_cast<std::size_t>(i)] *
                         (dpsi(x) * (u[static_cast<std::size_t>(i)] + C) + inv_sq(x) * psi(x)) -
                     dpsi(x) * out.bad_vals[static_cast<std::size_t>(i)];
            // analytic fallback at the edges; only interior points use FD
            mean += w;
            Real dev = abs(w - 1);
            if (dev > worst) worst = dev;
            continue;
        }
        Real u_plus = u[static_cast<std::size_t>(i)] + tanh_sinh(inv_sq, x, x + h, quad_tol);
        Real u_minus = u[static_cast<std::size_t>(i)] - tanh_sinh(inv_sq, x - h, x, quad_tol);
        Real bad_plus = psi(x + h) * (u_plus + C);
        Real bad_minus = psi(x - h) * (u_minus + C);
        Real w = psi(x) * (bad_plus - bad_minus) / (2 * h) -
                 dpsi(x) * out.bad_vals[static_cast<std::size_t>(i)];
        mean += w;
        Real dev = abs(w - 1);
        if (dev > worst) worst = dev;
    }
    out.wronskian = mean / n_samples;
    out.wronskian_max_dev = worst;
    return out;
}

/// |psi_bad| sampled along a complex ray, with C chosen to cancel the
/// growing component along the ray passed as `kill_angle`. Demonstrates
/// the one-sided nature of the bad solution: the same constant leaves
/// exponential growth along the mirror ray.
inline std::vector<std::pair<double, Real>>
bad_solution_ray_magnitudes(const QesEigenfunction& good, double kill_angle,
                            double sample_angle, double r_hi, int n_samples = 24) {
    PrecisionGuard guard(40);
    using boost::multiprecision::abs;
    std::vector<Real> gx, gw;
    gauss_legendre_nodes(32, gx, gw);

    auto inv_sq_along = [&](double angle) {
        CReal phase(Real(std::cos(angle)), Real(std::sin(angle)));
        return [phase, &good](const Real& r) -> CReal {
            CReal x = r * phase;
            CReal v = good(x);
            return phase / (v * v);
        };
    };

    // u(r) along a ray: path integral of psi^{-2} from the origin
    auto u_along = [&](double angle, const Real& r_to, int panels) -> CReal {
        auto f = inv_sq_along(angle);
        CReal acc(Real(0));
        for (int i = 0; i < panels; ++i) {
            Real a = r_to * i / panels, b = r_to * (i + 1) / panels;
            acc += gauss_panel(f, a, b, gx, gw);
        }
        return acc;
    };

    // cancel the growth along kill_angle: C = -u(R_inf) along that ray
    const Real R_inf = Real(r_hi) * 3 / 2;
    CReal C = -u_along(kill_angle, R_inf, 192);

    std::vector<std::pair<double, Real>> out;
    CReal phase(Real(std::cos(sample_angle)), Real(std::sin(sample_angle)));
    for (int i = 1; i <= n_samples; ++i) {
        Real r = Real(r_hi) * i / n_samples;
        CReal x = r * phase;
        CReal bad = good(x) * (u_along(sample_angle, r, 96) + C);
        out.emplace_back(static_cast<double>(r), abs(bad));
    }
    return out;
}

} // namespace qes
