#ifndef TRICOVER_THETA_HPP
#define TRICOVER_THETA_HPP

// Genus-4 theta constants with sixth-integer characteristics:
//   theta_{a,b}(tau) = sum_{n in Z^4} exp[pi i ((n+a) tau t(n+a) + 2(n+a) tb)]
// evaluated by a rigorously truncated lattice sum. The truncation radius comes
// from the sup-norm shell bound
//   sum_{k>=R} s(k) exp(-pi lambda (k-1)^2) <= eps,  s(k) = (2k+1)^4-(2k-1)^4,
// where lambda is a smallest-eigenvalue estimate for Im tau.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "tricover/ball.hpp"
#include "tricover/characteristics.hpp"
#include "tricover/errors.hpp"
#include "tricover/forms.hpp"
#include "tricover/linalg.hpp"

namespace tricover {

inline constexpr double kLambdaMinFloor = 1e-4;
inline constexpr int kThetaRadiusCap = 48;

inline double shell_count(int k) {
    double a = 2.0 * k + 1.0, b = 2.0 * k - 1.0;
    return a * a * a * a - b * b * b * b;
}

// tail mass of all shells with index >= R
inline double shell_tail(double lambda_min, int R) {
    double t = 0;
    for (int k = R;; ++k) {
        double term = shell_count(k) * std::exp(-kPi * lambda_min * (k - 1.0) * (k - 1.0));
        t += term;
        if (k > R + 4 && term < 1e-320) break;
        if (k > R + 100000) break;
    }
    return t;
}

inline int truncation_radius(double lambda_min, double eps) {
    if (!(lambda_min > 0)) throw domain_error("truncation_radius: lambda_min must be positive");
    if (!(eps > 0)) throw domain_error("truncation_radius: eps must be positive");
    for (int R = 1; R <= kThetaRadiusCap; ++R)
        if (shell_tail(lambda_min, R) <= eps) return R;
    throw boundary_error("truncation_radius: radius cap exceeded (Im tau too close to degenerate)");
}

struct ThetaValue {
    cdouble value{};
    double tail_bound = 0.0;
    int radius_used = 0;
};

namespace detail {

struct Kahan {
    double hi = 0.0, lo = 0.0;
    void add(double x) {
        double y = x - lo;
        double t = hi + y;
        lo = (t - hi) - y;
        hi = t;
    }
};

// exp(i pi z)
inline cdouble eipi(cdouble z) {
    double re = std::exp(-kPi * z.imag());
    double ph = kPi * z.real();
    return {re * std::cos(ph), re * std::sin(ph)};
}

} // namespace detail

// Direct lattice sum at z = 0 over the box ||n + a||_inf <= R, accumulated in
// lexicographic order with compensated summation. Each innermost row is
// generated outward from its magnitude peak (two complex multiplies per term),
// so edge terms that underflow cannot wipe out a row's interior.
inline cdouble theta_sum(const CMat& tau, const std::array<double, 4>& a,
                         const std::array<double, 4>& b, int R) {
    std::array<int, 4> lo{}, hi{};
    for (int i = 0; i < 4; ++i) {
        lo[static_cast<std::size_t>(i)] = static_cast<int>(std::ceil(-R - a[static_cast<std::size_t>(i)]));
        hi[static_cast<std::size_t>(i)] = static_cast<int>(std::floor(R - a[static_cast<std::size_t>(i)]));
    }
    detail::Kahan sre, sim;
    const cdouble q = detail::eipi(2.0 * tau(3, 3));
    const double im_t33 = tau(3, 3).imag();
    std::vector<cdouble> row(static_cast<std::size_t>(hi[3] - lo[3] + 1));
    auto term_at = [&](cdouble alpha, cdouble gamma, double u) {
        return detail::eipi(alpha + 2.0 * u * gamma + u * u * tau(3, 3) + 2.0 * u * b[3]);
    };
    for (int n0 = lo[0]; n0 <= hi[0]; ++n0) {
        double m0 = n0 + a[0];
        for (int n1 = lo[1]; n1 <= hi[1]; ++n1) {
            double m1 = n1 + a[1];
            for (int n2 = lo[2]; n2 <= hi[2]; ++n2) {
                double m2 = n2 + a[2];
                // alpha = sum_{i,j<=2} m_i tau_ij m_j + 2 sum_{i<=2} m_i b_i
                cdouble alpha = m0 * m0 * tau(0, 0) + m1 * m1 * tau(1, 1) + m2 * m2 * tau(2, 2) +
                                2.0 * (m0 * m1 * tau(0, 1) + m0 * m2 * tau(0, 2) + m1 * m2 * tau(1, 2));
                alpha += 2.0 * (m0 * b[0] + m1 * b[1] + m2 * b[2]);
                cdouble gamma = m0 * tau(0, 3) + m1 * tau(1, 3) + m2 * tau(2, 3);
                // |term(u)| peaks at u = -Im(gamma)/Im(tau33)
                double upeak = -gamma.imag() / im_t33;
                int npeak = static_cast<int>(std::lround(upeak - a[3]));
                npeak = std::max(lo[3], std::min(hi[3], npeak));
                double up = npeak + a[3];
                cdouble tpk = term_at(alpha, gamma, up);
                row.assign(row.size(), cdouble(0.0));
                row[static_cast<std::size_t>(npeak - lo[3])] = tpk;
                // upward: term(u+1) = term(u) * s,  s <- s q
                cdouble t = tpk;
                cdouble s = detail::eipi(2.0 * gamma + 2.0 * b[3] + (2.0 * up + 1.0) * tau(3, 3));
                for (int n3 = npeak + 1; n3 <= hi[3]; ++n3) {
                    t *= s;
                    s *= q;
                    row[static_cast<std::size_t>(n3 - lo[3])] = t;
                    if (std::abs(t.real()) + std::abs(t.imag()) < 1e-320) break;
                }
                // downward: term(u-1) = term(u) * d,  d <- d q
                t = tpk;
                cdouble d = detail::eipi(-(2.0 * gamma + 2.0 * b[3] + (2.0 * up - 1.0) * tau(3, 3)));
                for (int n3 = npeak - 1; n3 >= lo[3]; --n3) {
                    t *= d;
                    d *= q;
                    row[static_cast<std::size_t>(n3 - lo[3])] = t;
                    if (std::abs(t.real()) + std::abs(t.imag()) < 1e-320) break;
                }
                for (const cdouble& v : row) {
                    sre.add(v.real());
                    sim.add(v.imag());
                }
            }
        }
    }
    return {sre.hi, sim.hi};
}

// characteristic evaluated at its stored (printed) representative
inline ThetaValue theta_constant(const SixthChar& c, const SiegelPoint& tau, double eps = 1e-12) {
    double lambda = tau.lambda_min;
    if (lambda < kLambdaMinFloor)
        throw boundary_error("theta_constant: Im tau eigenvalue below floor (too close to ball boundary)");
    // safety margin on the eigenvalue estimate feeding the rigorous tail bound
    double lam = lambda * (1.0 - 1e-9);
    int R = truncation_radius(lam, eps);
    std::array<double, 4> a{}, b{};
    auto b6 = c.six_b();
    for (int i = 0; i < 4; ++i) {
        a[static_cast<std::size_t>(i)] = c.six_a[static_cast<std::size_t>(i)] / 6.0;
        b[static_cast<std::size_t>(i)] = b6[static_cast<std::size_t>(i)] / 6.0;
    }
    ThetaValue v;
    v.value = theta_sum(tau.tau, a, b, R);
    v.tail_bound = shell_tail(lam, R + 1);
    v.radius_used = R;
    return v;
}

// generic (a,b), used by shift/evenness property tests
inline ThetaValue theta_constant_ab(const std::array<double, 4>& a, const std::array<double, 4>& b,
                                    const SiegelPoint& tau, double eps = 1e-12) {
    double lambda = tau.lambda_min;
    if (lambda < kLambdaMinFloor) throw boundary_error("theta_constant_ab: Im tau eigenvalue below floor");
    double lam = lambda * (1.0 - 1e-9);
    // box chosen for ||n||_inf <= R + ceil(max|a|); same shell bound applies
    double amax = 0;
    for (double x : a) amax = std::max(amax, std::abs(x));
    int extra = static_cast<int>(std::ceil(amax));
    int R = truncation_radius(lam, eps) + (extra > 1 ? extra - 1 : 0);
    ThetaValue v;
    v.value = theta_sum(tau.tau, a, b, R);
    v.tail_bound = shell_tail(lam, R + 1);
    v.radius_used = R;
    return v;
}

struct ThetaCube {
    Matching label;
    cdouble cube;       // theta^3
    double error_bound; // first-order propagated: 3 |theta|^2 eps + O(eps^2)
};

// Cubes of the fifteen surviving theta constants at j(x), canonical label order.
inline std::vector<ThetaCube> theta_cubes(const BallPoint& x, double eps = 1e-12) {
    SiegelPoint tau = embed_j(x);
    std::vector<ThetaCube> out;
    out.reserve(15);
    for (const auto& m : canonical_matchings()) {
        SixthChar c = characteristic_for_matching(m);
        ThetaValue t = theta_constant(c, tau, eps);
        ThetaCube tc;
        tc.label = m;
        tc.cube = t.value * t.value * t.value;
        double av = std::abs(t.value);
        double e = t.tail_bound + eps;
        tc.error_bound = 3 * av * av * e + 3 * av * e * e + e * e * e;
        out.push_back(tc);
    }
    return out;
}

} // namespace tricover

#endif
