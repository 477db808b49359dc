#ifndef TRICOVER_CONFIGSPACE_HPP
#define TRICOVER_CONFIGSPACE_HPP

// Marked configurations of six points on P^1 as 2x6 matrices with nonzero
// 2x2 minors, the bracket embedding into P^14 indexed by pair partitions
// <ij;kl;mn>, the sign conventions
//   y<ji;kl;mn> = -y<ij;kl;mn>,  y<ij;kl;mn> = y<kl;ij;mn> = y<ij;mn;kl>,
// the linear/cubic relations cutting out the image, and the S6 action.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "tricover/characteristics.hpp"
#include "tricover/errors.hpp"
#include "tricover/linalg.hpp"

namespace tricover {

struct ConfigPoint {
    CMat m; // 2x6, homogeneous columns

    static ConfigPoint from(const CMat& m, double tol = 1e-13) {
        if (m.rows() != 2 || m.cols() != 6) throw input_error("ConfigPoint: need 2x6");
        ConfigPoint p{m};
        double scale = m.max_abs();
        for (int k = 1; k <= 6; ++k)
            for (int l = k + 1; l <= 6; ++l)
                if (std::abs(p.bracket(k, l)) <= tol * scale * scale)
                    throw domain_error("ConfigPoint: vanishing minor <" + std::to_string(k) +
                                       std::to_string(l) + ">");
        return p;
    }

    // points lambda_1..lambda_6 on the affine line
    static ConfigPoint from_affine(const std::array<double, 6>& lambda) {
        CMat m(2, 6);
        for (int k = 0; k < 6; ++k) {
            m(0, k) = 1.0;
            m(1, k) = lambda[static_cast<std::size_t>(k)];
        }
        return from(m);
    }

    cdouble bracket(int k, int l) const { // 2x2 minor on columns k,l (1-based)
        return m(0, k - 1) * m(1, l - 1) - m(1, k - 1) * m(0, l - 1);
    }
};

// the fifteen projective coordinates, canonical label order
struct YPoint {
    std::array<cdouble, 15> y{};

    cdouble operator[](const Matching& mt) const { return y[static_cast<std::size_t>(matching_index(mt))]; }

    // value for an arbitrary ordered pair list, resolving the antisymmetry signs
    cdouble signed_value(std::array<std::array<int, 2>, 3> pairs) const {
        double sign = 1;
        for (auto& p : pairs)
            if (p[0] > p[1]) { std::swap(p[0], p[1]); sign = -sign; }
        Matching mt{pairs};
        mt.canonicalize();
        return sign * (*this)[mt];
    }

    double max_abs() const {
        double m = 0;
        for (const auto& z : y) m = std::max(m, std::abs(z));
        return m;
    }

    YPoint normalized() const {
        double m = max_abs();
        if (m == 0) throw input_error("YPoint: zero vector");
        YPoint r;
        for (int i = 0; i < 15; ++i) r.y[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / m;
        return r;
    }
};

inline YPoint iota(const ConfigPoint& p) {
    YPoint out;
    const auto& ms = canonical_matchings();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& pr = ms[i].pairs;
        out.y[i] = p.bracket(pr[0][0], pr[0][1]) * p.bracket(pr[1][0], pr[1][1]) *
                   p.bracket(pr[2][0], pr[2][1]);
    }
    return out;
}

struct YResiduals {
    double linear = 0.0;
    double cubic = 0.0;
};

// max residual of the three-term linear family (one identity per
// distinguished pair) and of the cubic six-factor family, on the
// max-normalized vector
inline YResiduals y_relation_residuals(const YPoint& y_in) {
    YPoint y = y_in.normalized();
    YResiduals r;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            std::array<int, 4> rest{};
            int c = 0;
            for (int v = 1; v <= 6; ++v)
                if (v != i && v != j) rest[static_cast<std::size_t>(c++)] = v;
            auto [p, q, s, t] = rest;
            cdouble lin = y.signed_value({{{i, j}, {p, q}, {s, t}}}) -
                          y.signed_value({{{i, j}, {p, s}, {q, t}}}) +
                          y.signed_value({{{i, j}, {p, t}, {q, s}}});
            r.linear = std::max(r.linear, std::abs(lin));
        }
    std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
    do {
        int i = perm[0], j = perm[1], k = perm[2], l = perm[3], m = perm[4], n = perm[5];
        cdouble lhs = y.signed_value({{{i, j}, {k, l}, {m, n}}}) *
                      y.signed_value({{{i, k}, {j, n}, {l, m}}}) *
                      y.signed_value({{{i, m}, {j, l}, {k, n}}});
        cdouble rhs = y.signed_value({{{i, j}, {k, n}, {l, m}}}) *
                      y.signed_value({{{i, k}, {j, l}, {m, n}}}) *
                      y.signed_value({{{i, m}, {j, n}, {k, l}}});
        r.cubic = std::max(r.cubic, std::abs(lhs - rhs));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

using Perm6 = std::array<int, 6>; // sigma[i-1] = image of letter i

inline Perm6 perm_identity() { return {1, 2, 3, 4, 5, 6}; }

inline Perm6 perm_compose(const Perm6& s, const Perm6& t) { // (s*t)(i) = s(t(i))
    Perm6 r{};
    for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(t[static_cast<std::size_t>(i)] - 1)];
    return r;
}

inline Perm6 perm_transposition(int i, int j) {
    Perm6 r = perm_identity();
    std::swap(r[static_cast<std::size_t>(i - 1)], r[static_cast<std::size_t>(j - 1)]);
    return r;
}

// relabel indices by sigma, restore canonical order with convention signs
inline YPoint s6_act(const Perm6& sigma, const YPoint& y) {
    YPoint out;
    const auto& ms = canonical_matchings();
    for (std::size_t idx = 0; idx < ms.size(); ++idx) {
        std::array<std::array<int, 2>, 3> pairs = ms[idx].pairs;
        for (auto& p : pairs) {
            p[0] = sigma[static_cast<std::size_t>(p[0] - 1)];
            p[1] = sigma[static_cast<std::size_t>(p[1] - 1)];
        }
        double sign = 1;
        for (auto& p : pairs)
            if (p[0] > p[1]) { std::swap(p[0], p[1]); sign = -sign; }
        Matching mt{pairs};
        mt.canonicalize();
        out.y[static_cast<std::size_t>(matching_index(mt))] = sign * y.y[idx];
    }
    return out;
}

inline ConfigPoint permute_columns(const Perm6& sigma, const ConfigPoint& p) {
    CMat m(2, 6);
    for (int k = 1; k <= 6; ++k) {
        int dst = sigma[static_cast<std::size_t>(k - 1)];
        m(0, dst - 1) = p.m(0, k - 1);
        m(1, dst - 1) = p.m(1, k - 1);
    }
    return ConfigPoint::from(m);
}

// cross-ratio normal form sending columns 1,2,3 to infinity, 0, 1;
// returns the images (l1, l2, l3) of columns 4, 5, 6
inline std::array<cdouble, 3> normalize_config(const ConfigPoint& p) {
    auto alpha = [&](int col) { // det(c_col, c_1): vanishes at column 1
        return p.m(0, col - 1) * p.m(1, 0) - p.m(1, col - 1) * p.m(0, 0);
    };
    auto beta = [&](int col) { // det(c_col, c_2)
        return p.m(0, col - 1) * p.m(1, 1) - p.m(1, col - 1) * p.m(0, 1);
    };
    cdouble a3 = alpha(3), b3 = beta(3);
    std::array<cdouble, 3> ell{};
    for (int t = 0; t < 3; ++t) {
        int col = 4 + t;
        cdouble den = alpha(col) * b3;
        if (std::abs(den) == 0.0) throw degeneracy_error("normalize_config: degenerate minors");
        ell[static_cast<std::size_t>(t)] = beta(col) * a3 / den;
    }
    for (int t = 0; t < 3; ++t) {
        cdouble v = ell[static_cast<std::size_t>(t)];
        if (std::abs(v) < 1e-12 || std::abs(v - 1.0) < 1e-12)
            throw consistency_error("normalize_config: normal form hit 0/1 (degenerate input)");
    }
    return ell;
}

// projective distance: normalize both by the entry of largest modulus in the
// reference, compare max relative deviation; least-squares scale cross-check
struct ProjectiveComparison {
    double max_dev = 0.0;       // after largest-entry normalization
    double lsq_dev = 0.0;       // after least-squares scale
};

inline ProjectiveComparison projective_compare(const YPoint& a, const YPoint& b) {
    int ref = 0;
    double best = 0;
    for (int i = 0; i < 15; ++i) {
        double m = std::abs(b.y[static_cast<std::size_t>(i)]);
        if (m > best) { best = m; ref = i; }
    }
    if (best == 0 || std::abs(a.y[static_cast<std::size_t>(ref)]) == 0)
        throw degeneracy_error("projective_compare: zero reference coordinate");
    cdouble scale = b.y[static_cast<std::size_t>(ref)] / a.y[static_cast<std::size_t>(ref)];
    double scaleb = 0;
    ProjectiveComparison r;
    for (int i = 0; i < 15; ++i) scaleb = std::max(scaleb, std::abs(b.y[static_cast<std::size_t>(i)]));
    for (int i = 0; i < 15; ++i)
        r.max_dev = std::max(r.max_dev,
                             std::abs(scale * a.y[static_cast<std::size_t>(i)] - b.y[static_cast<std::size_t>(i)]) / scaleb);
    // least-squares scale: argmin_s sum |s a - b|^2 = <a,b>/<a,a>
    cdouble num = 0, den = 0;
    for (int i = 0; i < 15; ++i) {
        num += std::conj(a.y[static_cast<std::size_t>(i)]) * b.y[static_cast<std::size_t>(i)];
        den += std::conj(a.y[static_cast<std::size_t>(i)]) * a.y[static_cast<std::size_t>(i)];
    }
    cdouble s2 = num / den;
    for (int i = 0; i < 15; ++i)
        r.lsq_dev = std::max(r.lsq_dev,
                             std::abs(s2 * a.y[static_cast<std::size_t>(i)] - b.y[static_cast<std::size_t>(i)]) / scaleb);
    return r;
}

} // namespace tricover

#endif
