#ifndef TRICOVER_QUADRATURE_HPP
#define TRICOVER_QUADRATURE_HPP

// Adaptive tanh-sinh (double exponential) quadrature on straight segments.
// Nodes t_k = tanh((pi/2) sinh(kh)) cluster doubly-exponentially at the
// endpoints. Endpoint distances are carried as the stable complement
// 1 - |t| = 2/(e^{2u}+1), never through the rounded node itself, so algebraic
// endpoint singularities like z^{-1/3}, z^{-2/3} integrate at full accuracy.
// Levels halve h starting at level 5 up to level 12; successive-level
// agreement within tol is the stop rule.

#include <cmath>
#include <complex>
#include <string>

#include "tricover/errors.hpp"

namespace tricover {

using cdouble = std::complex<double>;

struct QuadratureResult {
    std::complex<double> value{};
    double error_estimate = 0.0;
    int level_used = 0;
    long long evaluations = 0;
};

namespace detail_quad {

inline constexpr double kPiHalf = 1.57079632679489661923132169163975144;

// f(t, comp) with comp = 1 - |t| held exactly; weight folded in here
template <class F>
std::complex<double> pass(const F& f, double h, bool base, long long& evals) {
    std::complex<double> acc{};
    if (base) {
        acc += f(0.0, 1.0) * kPiHalf;
        ++evals;
    }
    int step = base ? 1 : 2;
    for (long long k = 1;; k += step) {
        double kh = k * h;
        double u = kPiHalf * std::sinh(kh);
        if (u > 350.0) break; // comp underflows; contributions are zero in double
        double cu = std::cosh(u);
        double w = kPiHalf * std::cosh(kh) / (cu * cu);
        double t = std::tanh(u);
        double comp = 2.0 / (std::exp(2.0 * u) + 1.0); // 1 - |t|, no cancellation
        if (comp == 0.0 || w < 1e-320) break;
        acc += (f(t, comp) + f(-t, comp)) * w;
        evals += 2;
    }
    return acc;
}

} // namespace detail_quad

// integral over [-1,1]; f(t, comp) with comp = 1 - |t|
template <class F>
QuadratureResult tanh_sinh_core(const F& f, double tol, int start_level = 5, int max_level = 12) {
    QuadratureResult r;
    double h = std::pow(0.5, start_level);
    long long evals = 0;
    std::complex<double> sum = detail_quad::pass(f, h, true, evals);
    r.evaluations = evals;
    std::complex<double> prev = h * sum;
    for (int level = start_level + 1; level <= max_level; ++level) {
        h *= 0.5;
        evals = 0;
        sum += detail_quad::pass(f, h, false, evals);
        r.evaluations += evals;
        std::complex<double> cur = h * sum;
        double scale = std::max(1.0, std::abs(cur));
        double diff = std::abs(cur - prev);
        r.value = cur;
        r.error_estimate = diff;
        r.level_used = level;
        if (diff <= tol * scale) return r;
        prev = cur;
    }
    throw quadrature_error("tanh_sinh: no convergence by level " + std::to_string(max_level) +
                           " (last delta " + std::to_string(r.error_estimate) + ")");
}

// straight segment a -> b, smooth integrand f(z)
template <class F>
QuadratureResult integrate_segment(const F& f, std::complex<double> a, std::complex<double> b,
                                   double tol) {
    std::complex<double> mid = 0.5 * (a + b);
    std::complex<double> half = 0.5 * (b - a);
    auto g = [&](double t, double comp) {
        std::complex<double> z = t > 0.5 ? b - comp * half : (t < -0.5 ? a + comp * half : mid + t * half);
        return f(z) * half;
    };
    return tanh_sinh_core(g, tol);
}

// straight segment a -> b whose integrand may carry algebraic singularities at
// the endpoints: f receives (z, z - a, z - b) with the endpoint differences
// computed from the stable complement
template <class F>
QuadratureResult integrate_segment_singular(const F& f, std::complex<double> a,
                                            std::complex<double> b, double tol) {
    std::complex<double> mid = 0.5 * (a + b);
    std::complex<double> half = 0.5 * (b - a);
    auto g = [&](double t, double comp) {
        std::complex<double> za = (t < 0 ? comp : 1.0 + t) * half;        // z - a
        std::complex<double> zb = (t > 0 ? -comp : t - 1.0) * half;       // z - b
        std::complex<double> z = t > 0.5 ? b + zb : (t < -0.5 ? a + za : mid + t * half);
        return f(z, za, zb) * half;
    };
    return tanh_sinh_core(g, tol);
}

} // namespace tricover

#endif
