#ifndef TRICOVER_INVERSE_HPP
#define TRICOVER_INVERSE_HPP

// The inverse period map: Theta sends a ball point x to the projective vector
// of the fifteen theta cubes at j(x); on period images this inverts the
// forward map, recovering the normalized branch points through
//   l1 = theta^3(13;24;56) / theta^3(14;23;56),
//   l2 = theta^3(13;25;46) / theta^3(15;23;46),
//   l3 = theta^3(13;26;45) / theta^3(16;23;45).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricover/ball.hpp"
#include "tricover/characteristics.hpp"
#include "tricover/configspace.hpp"
#include "tricover/curve.hpp"
#include "tricover/errors.hpp"
#include "tricover/theta.hpp"

namespace tricover {

struct ThetaMapResult {
    YPoint y;                 // fifteen theta cubes under canonical labels
    YResiduals residuals;     // linear / cubic families on the normalized vector
    double min_abs = 0.0;     // smallest |coordinate| after normalization
    double error_bound = 0.0; // max propagated cube error, relative to the largest cube
};

inline ThetaMapResult theta_map(const BallPoint& x, double eps = 1e-12) {
    auto cubes = theta_cubes(x, eps);
    ThetaMapResult r;
    double maxabs = 0;
    for (int i = 0; i < 15; ++i) {
        r.y.y[static_cast<std::size_t>(i)] = cubes[static_cast<std::size_t>(i)].cube;
        maxabs = std::max(maxabs, std::abs(cubes[static_cast<std::size_t>(i)].cube));
    }
    if (maxabs == 0) throw consistency_error("theta_map: all cubes vanish");
    r.min_abs = 1.0;
    for (int i = 0; i < 15; ++i) {
        r.min_abs = std::min(r.min_abs, std::abs(r.y.y[static_cast<std::size_t>(i)]) / maxabs);
        r.error_bound = std::max(r.error_bound, cubes[static_cast<std::size_t>(i)].error_bound / maxabs);
    }
    r.residuals = y_relation_residuals(r.y);
    double budget = 100 * std::max(r.error_bound, 1e-10);
    if (r.residuals.linear > budget || r.residuals.cubic > budget)
        throw consistency_error("theta_map: Y-relation residuals far above theta error budget");
    return r;
}

struct EllResult {
    std::array<cdouble, 3> ell{};
    double cross_check_dev = 0.0; // relative disagreement of the second route for l2
};

inline cdouble cube_ratio(const YPoint& y, const Matching& num, const Matching& den,
                          double min_den_rel, double maxabs) {
    cdouble d = y[den];
    if (std::abs(d) < min_den_rel * maxabs)
        throw mirror_error("ell_from_theta: denominator theta cube too close to a mirror zero");
    return y[num] / d;
}

inline EllResult ell_from_theta(const BallPoint& x, double eps = 1e-12) {
    ThetaMapResult t = theta_map(x, eps);
    const YPoint& y = t.y;
    double maxabs = y.max_abs();
    const double floor_rel = 1e-7;
    EllResult r;
    r.ell[0] = cube_ratio(y, Matching::of(1, 3, 2, 4, 5, 6), Matching::of(1, 4, 2, 3, 5, 6), floor_rel, maxabs);
    r.ell[1] = cube_ratio(y, Matching::of(1, 3, 2, 5, 4, 6), Matching::of(1, 5, 2, 3, 4, 6), floor_rel, maxabs);
    r.ell[2] = cube_ratio(y, Matching::of(1, 3, 2, 6, 4, 5), Matching::of(1, 6, 2, 3, 4, 5), floor_rel, maxabs);
    // independent route for l2 coming from the cubic relation:
    // l2 = theta^3(14;25;36) theta^3(13;24;56) / [theta^3(15;24;36) theta^3(14;23;56)]
    cdouble n1 = y[Matching::of(1, 4, 2, 5, 3, 6)], n2 = y[Matching::of(1, 3, 2, 4, 5, 6)];
    cdouble d1 = y[Matching::of(1, 5, 2, 4, 3, 6)], d2 = y[Matching::of(1, 4, 2, 3, 5, 6)];
    if (std::abs(d1) < floor_rel * maxabs || std::abs(d2) < floor_rel * maxabs)
        throw mirror_error("ell_from_theta: cross-check denominator too close to a mirror zero");
    cdouble alt = (n1 * n2) / (d1 * d2);
    r.cross_check_dev = std::abs(alt - r.ell[1]) / std::max(1.0, std::abs(r.ell[1]));
    if (r.cross_check_dev > 1e-7)
        throw consistency_error("ell_from_theta: the two routes for l2 disagree");
    return r;
}

struct RoundtripReport {
    Vec4 x{};
    double twist_residual = 0.0;
    double theta_linear_residual = 0.0;
    double theta_cubic_residual = 0.0;
    double projective_deviation = 0.0;     // Theta(psi(lambda)) vs iota(lambda), best relabeling
    double lsq_deviation = 0.0;
    Perm6 relabeling = perm_identity();     // S6 relabeling achieving the match
    bool identity_relabeling = false;
    std::array<cdouble, 3> ell_theta{};     // from theta ratios
    std::array<cdouble, 3> ell_config{};    // cross-ratio normal form
    double ell_deviation = 0.0;
};

// Theta(psi(lambda)) compared projectively against iota(lambda); accepts a
// documented S6 relabeling, reporting whichever permutation fits best.
inline RoundtripReport roundtrip(const BranchData& bd, double tol = 1e-10, double eps = 1e-12,
                                 const CycleTable& table = CycleTable::builtin()) {
    CyclePeriods p = psi_forward(bd, tol, table);
    BallPoint x = BallPoint::from(p.xA);
    ThetaMapResult tm = theta_map(x, eps);

    ConfigPoint cfg = ConfigPoint::from_affine(bd.lambda);
    YPoint target = iota(cfg);

    RoundtripReport rep;
    rep.x = x.x;
    rep.twist_residual = p.twist_residual;
    rep.theta_linear_residual = tm.residuals.linear;
    rep.theta_cubic_residual = tm.residuals.cubic;

    Perm6 best = perm_identity();
    ProjectiveComparison best_cmp;
    bool have = false;
    std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
    do {
        Perm6 sigma = perm;
        YPoint moved = s6_act(sigma, tm.y);
        ProjectiveComparison cmp = projective_compare(moved, target);
        if (!have || cmp.max_dev < best_cmp.max_dev) {
            best = sigma;
            best_cmp = cmp;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.relabeling = best;
    rep.projective_deviation = best_cmp.max_dev;
    rep.lsq_deviation = best_cmp.lsq_dev;
    rep.identity_relabeling = best == perm_identity();

    rep.ell_config = normalize_config(cfg);
    EllResult er = ell_from_theta(x, eps);
    rep.ell_theta = er.ell;
    for (int i = 0; i < 3; ++i)
        rep.ell_deviation = std::max(rep.ell_deviation,
                                     std::abs(rep.ell_theta[static_cast<std::size_t>(i)] -
                                              rep.ell_config[static_cast<std::size_t>(i)]) /
                                         std::max(1.0, std::abs(rep.ell_config[static_cast<std::size_t>(i)])));
    return rep;
}

} // namespace tricover

#endif
