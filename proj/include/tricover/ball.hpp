#ifndef TRICOVER_BALL_HPP
#define TRICOVER_BALL_HPP

// The 3-ball {x in P^3 : t(conj x) H x < 0} and its embedding into the
// degree-4 Siegel space:
//   Omega = w [I - (1-w)(x tx H)/(tx H x)] H = w H - sqrt(-3) (x tx)/(tx H x).

#include <array>
#include <cmath>

#include "tricover/eisenstein.hpp"
#include "tricover/errors.hpp"
#include "tricover/forms.hpp"
#include "tricover/linalg.hpp"

namespace tricover {

struct BallCheck {
    bool inside = false;
    double margin = 0.0; // -t(conj x) H x / t(conj x) x
};

inline BallCheck inside_ball(const Vec4& x) {
    double nrm = 0;
    for (const auto& z : x) nrm += std::norm(z);
    if (nrm == 0.0) throw input_error("inside_ball: zero vector");
    double pairing = hermitian_pairing(x, x).real();
    BallCheck r;
    r.margin = -pairing / nrm;
    r.inside = pairing < 0;
    return r;
}

// Projective representative scaled so the largest-modulus entry is 1
// (ties broken by lowest index).
struct BallPoint {
    Vec4 x;
    double margin = 0.0;
    bool near_boundary = false; // margin < 1e-6: theta truncation cost explodes

    static BallPoint from(const Vec4& raw) {
        BallCheck c = inside_ball(raw);
        if (!c.inside) throw domain_error("BallPoint: t(conj x) H x >= 0");
        int best = 0;
        double bm = 0;
        for (int i = 0; i < 4; ++i) {
            double m = std::abs(raw[static_cast<std::size_t>(i)]);
            if (m > bm * (1 + 1e-15)) { bm = m; best = i; }
        }
        BallPoint p;
        cdouble scale = raw[static_cast<std::size_t>(best)];
        for (int i = 0; i < 4; ++i) p.x[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] / scale;
        p.margin = c.margin;
        p.near_boundary = c.margin < 1e-6;
        return p;
    }
};

struct SiegelPoint {
    CMat tau; // symmetric, Im positive definite
    double lambda_min = 0.0;

    static SiegelPoint from(const CMat& t, double sym_tol = 1e-12) {
        if (t.rows() != 4 || t.cols() != 4) throw input_error("SiegelPoint: need 4x4");
        if (symmetry_defect(t) > sym_tol * std::max(1.0, t.max_abs()))
            throw input_error("SiegelPoint: not symmetric");
        auto pd = is_positive_definite(t.imag_part(), 1e-14);
        if (!pd.positive) throw input_error("SiegelPoint: Im(tau) not positive definite");
        SiegelPoint s;
        s.tau = t;
        s.lambda_min = pd.lambda_min;
        return s;
    }
};

// Omega = w H - sqrt(-3) (x tx)/(tx H x); symmetric by construction.
inline SiegelPoint embed_j(const BallPoint& p, double check_tol = 1e-10) {
    const Vec4& x = p.x;
    cdouble s = 0.0; // tx H x (no conjugate)
    for (int i = 0; i < 4; ++i) s += x[static_cast<std::size_t>(i)] * kH[i] * x[static_cast<std::size_t>(i)];
    if (std::abs(s) < 1e-14)
        throw degeneracy_error("embed_j: tx H x vanishes");
    const cdouble sqrt_m3(0.0, 1.7320508075688772935274463415059);
    CMat omega(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) { // upper triangle mirrored: symmetric to the bit
            cdouble v = -sqrt_m3 * (x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)]) / s;
            omega(i, j) = v;
            omega(j, i) = v;
        }
        omega(i, i) += kOmega * kH[i];
    }
    SiegelPoint out = SiegelPoint::from(omega, 1e-12);

    // inverse identity Omega^{-1} = w^2 H [I - (1-w^2)(x tx H)/(tx H x)]
    CMat inv_claim(4, 4);
    cdouble om2 = kOmega * kOmega;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cdouble m = (i == j ? cdouble(1.0) : cdouble(0.0));
            m -= (1.0 - om2) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)] * kH[j] / s;
            inv_claim(i, j) = om2 * kH[i] * m;
        }
    if ((omega * inv_claim - CMat::identity(4)).max_abs() > check_tol)
        throw consistency_error("embed_j: inverse identity failed");
    return out;
}

inline BallPoint apply_matrix(const CMat& g, const BallPoint& p) {
    if (g.rows() != 4 || g.cols() != 4) throw input_error("apply_matrix: need 4x4");
    Vec4 y{};
    for (int i = 0; i < 4; ++i) {
        cdouble s = 0.0;
        for (int j = 0; j < 4; ++j) s += g(i, j) * p.x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return BallPoint::from(y);
}

} // namespace tricover

#endif
