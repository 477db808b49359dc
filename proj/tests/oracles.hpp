#ifndef TRICOVER_TESTS_ORACLES_HPP
#define TRICOVER_TESTS_ORACLES_HPP

// Test-side oracles, independent of the library implementation paths they
// check: one-dimensional Jacobi theta sums, the shell-count tail bound, and
// the Euler Beta value.

#include <cmath>
#include <complex>

namespace oracles {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// theta_{a,b}(tau) = sum_n exp[pi i ((n+a)^2 tau + 2 (n+a) b)], genus one
inline std::complex<double> theta1d(double a, double b, std::complex<double> tau, int N = 64) {
    std::complex<double> s = 0.0;
    const std::complex<double> I(0.0, 1.0);
    for (int n = -N; n <= N; ++n) {
        double m = n + a;
        s += std::exp(pi * I * (m * m * tau + 2.0 * m * b));
    }
    return s;
}

// product of four 1-D theta constants for a diagonal tau
inline std::complex<double> theta_diag(const std::array<double, 4>& a, const std::array<double, 4>& b,
                                       const std::array<std::complex<double>, 4>& tau_diag) {
    std::complex<double> p = 1.0;
    for (int i = 0; i < 4; ++i) p *= theta1d(a[(std::size_t)i], b[(std::size_t)i], tau_diag[(std::size_t)i]);
    return p;
}

// sup-norm shell tail: sum_{k>=R} [(2k+1)^4 - (2k-1)^4] exp(-pi lambda (k-1)^2)
inline double shell_tail(double lambda, int R, int kmax = 2000) {
    double t = 0;
    for (int k = R; k < kmax; ++k) {
        double a = 2.0 * k + 1.0, c = 2.0 * k - 1.0;
        t += (a * a * a * a - c * c * c * c) * std::exp(-pi * lambda * (k - 1.0) * (k - 1.0));
    }
    return t;
}

inline double beta_two_thirds() {
    return std::tgamma(2.0 / 3.0) * std::tgamma(2.0 / 3.0) / std::tgamma(4.0 / 3.0);
}

} // namespace oracles

#endif
