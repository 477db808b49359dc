#ifndef TRICOVER_SUITES_HPP
#define TRICOVER_SUITES_HPP

// Seeded verification suites shared by the CLI and the acceptance runner.
// Every tolerance is pinned here; reports carry the measured extremes next to
// the thresholds they were tested against.

#include <cmath>
#include <string>
#include <vector>

#include "tricover/ball.hpp"
#include "tricover/characteristics.hpp"
#include "tricover/configspace.hpp"
#include "tricover/curve.hpp"
#include "tricover/inverse.hpp"
#include "tricover/quadrature.hpp"
#include "tricover/report.hpp"
#include "tricover/rng.hpp"
#include "tricover/roots.hpp"
#include "tricover/symplectic.hpp"
#include "tricover/theta.hpp"

namespace tricover {

struct SuiteResult {
    std::string name;
    bool pass = false;
    Report details = Report::object();
};

// ---- sampling ---------------------------------------------------------------

// four complex gaussians rescaled so the ball margin is exact and >= 0.1
inline BallPoint sample_ball_point(SplitMix64& rng, double min_margin = 0.1, double max_margin = 0.9) {
    for (;;) {
        std::array<cdouble, 4> z{};
        for (auto& v : z) v = rng.complex_gaussian();
        double s123 = std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]);
        double s4 = std::norm(z[3]);
        if (s123 < 1e-12 || s4 < 1e-12) continue;
        double u = rng.uniform(min_margin, max_margin);
        double t = std::sqrt(s4 * (1.0 - u) / (s123 * (1.0 + u)));
        Vec4 x{t * z[0], t * z[1], t * z[2], z[3]};
        BallPoint p = BallPoint::from(x);
        if (p.margin >= min_margin) return p;
    }
}

// ball point on the mirror of the given root
inline BallPoint sample_mirror_point(SplitMix64& rng, const Root& r) {
    Vec4 v{};
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = r.v[static_cast<std::size_t>(i)].to_complex();
    cdouble nv = hermitian_pairing(v, v);
    for (;;) {
        BallPoint y = sample_ball_point(rng, 0.2, 0.9);
        cdouble c = hermitian_pairing(v, y.x) / nv;
        Vec4 x{};
        for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = y.x[static_cast<std::size_t>(i)] - c * v[static_cast<std::size_t>(i)];
        BallCheck bc = inside_ball(x);
        if (bc.inside && bc.margin > 0.05) return BallPoint::from(x);
    }
}

inline std::array<double, 6> sample_ordered_lambda(SplitMix64& rng, double lo = 0.0, double hi = 10.0,
                                                   double min_gap = 0.5) {
    for (;;) {
        std::array<double, 6> l{};
        for (auto& v : l) v = rng.uniform(lo, hi);
        std::sort(l.begin(), l.end());
        double g = hi - lo;
        for (int i = 0; i + 1 < 6; ++i) g = std::min(g, l[static_cast<std::size_t>(i + 1)] - l[static_cast<std::size_t>(i)]);
        if (g >= min_gap) return l;
    }
}

inline std::vector<std::pair<int, int>> sample_word(SplitMix64& rng, int max_len = 4) {
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::vector<std::pair<int, int>> w;
    for (int k = 0; k < len; ++k) {
        const Root& r = root_table()[rng.below(15)];
        w.push_back({r.i, r.j});
    }
    return w;
}

// ---- exact suites -----------------------------------------------------------

// braid/congruence/unitarity/square/determinant/rank relations plus the two
// lift routes agreeing, all exact
inline SuiteResult suite_group() {
    SuiteResult out;
    out.name = "group";
    GroupRelationReport rep = verify_group_relations();
    bool lifts_ok = true, grass_ok = true, hom_ok = true, unlift_ok = true;
    for (const auto& r : root_table()) {
        for (auto e : {ReflExponent::Omega, ReflExponent::Zeta}) {
            ZMatQ direct = lift_unitary(make_reflection(r.v, e).matrix);
            ZMatQ grass = lift_reflection(r.v, e);
            if (!(direct == grass)) grass_ok = false;
            if (!direct.is_integral() || !is_symplectic_exact(direct.num())) lifts_ok = false;
        }
    }
    // homomorphism and unlift round-trip on all generator pairs
    SplitMix64 rng(20240601);
    for (int trial = 0; trial < 24; ++trial) {
        const Root& r1 = root_table()[rng.below(15)];
        const Root& r2 = root_table()[rng.below(15)];
        EisMatQ g = reflection_for_pair(r1.i, r1.j, ReflExponent::Omega).matrix;
        EisMatQ h = reflection_for_pair(r2.i, r2.j, ReflExponent::Zeta).matrix;
        if (!(lift_unitary(g * h) == lift_unitary(g) * lift_unitary(h))) hom_ok = false;
        if (!(unlift(lift_unitary(g * h)) == g * h)) unlift_ok = false;
    }
    out.pass = rep.all() && lifts_ok && grass_ok && hom_ok && unlift_ok;
    out.details.set("braids", rep.braids);
    out.details.set("congruence_mod_one_minus_omega", rep.congruence);
    out.details.set("unitarity", rep.unitarity);
    out.details.set("zeta_squares", rep.squares);
    out.details.set("determinants", rep.determinants);
    out.details.set("mirror_rank_one", rep.mirror_rank);
    out.details.set("lifts_integral_symplectic", lifts_ok);
    out.details.set("grass_formula_matches_lift", grass_ok);
    out.details.set("lift_homomorphism", hom_ok);
    out.details.set("unlift_roundtrip", unlift_ok);
    out.details.set("arithmetic", "exact");
    if (!rep.failures.empty()) {
        Report fails = Report::array();
        for (const auto& f : rep.failures) fails.push(Report::string(f));
        out.details.set("failures", std::move(fails));
    }
    return out;
}

// the 81 characteristics: condition, class partition, label bijection,
// invariance under all fifteen lifted generators, and the W identities
inline SuiteResult suite_characteristics() {
    SuiteResult out;
    out.name = "characteristics";
    auto chars = all_characteristics_mod6();
    int invariant = 0;
    std::vector<ZMat> gens;
    for (const auto& r : root_table()) gens.push_back(lift_reflection(r.v, ReflExponent::Omega).num());
    for (const auto& c : chars) {
        CharVec v = char_vector(c);
        bool ok = true;
        for (const auto& g : gens)
            if (!congruent_mod_Z8(char_action(g, v).image, v)) { ok = false; break; }
        invariant += ok;
    }
    int n2 = 0, n10 = 0, n18 = 0, nfull = 0;
    for (const auto& c : chars) {
        LabelClass lc = classify(c);
        if (lc == LabelClass::TriplePairing) ++n2;
        else if (lc == LabelClass::Square) ++n10;
        else if (lc == LabelClass::Triple) ++n18;
        else ++nfull;
    }
    // label table is a bijection onto {1,3,5}^4 after mod-6 reduction
    std::vector<std::array<int, 4>> seen;
    bool bijection = true;
    auto push_rep = [&](const SixthChar& c) {
        auto m = c.mod6();
        for (const auto& s : seen)
            if (s == m) { bijection = false; return; }
        seen.push_back(m);
    };
    for (const auto& lab : all_labels()) {
        SixthChar c = characteristic_for_label(lab);
        push_rep(c);
        if (lab.cls == LabelClass::TriplePairing) push_rep(c.negated()); // the +- pair
    }
    bijection = bijection && seen.size() == 81;
    // W action: W.(a, -aH) congruence data and phi = (3/2) a H ta
    bool w_phase = true;
    for (const auto& c : chars) {
        CharVec v = char_vector(c);
        auto res = char_action(matrix_W(), v);
        BigRat expect(0);
        for (int i = 0; i < 4; ++i) {
            BigRat ai = BigRat::frac(c.six_a[static_cast<std::size_t>(i)], 6);
            expect += (i < 3 ? ai * ai : -(ai * ai));
        }
        expect *= BigRat::frac(3, 2);
        if (!(res.phase == expect)) w_phase = false;
    }
    out.pass = invariant == 81 && n2 == 30 && n10 == 30 && n18 == 20 && nfull == 1 && bijection && w_phase;
    out.details.set("invariant_count", invariant);
    out.details.set("class_2_count", n2);
    out.details.set("class_10_count", n10);
    out.details.set("class_18_count", n18);
    out.details.set("full_count", nfull);
    out.details.set("label_bijection", bijection);
    out.details.set("W_phase_identity", w_phase);
    out.details.set("arithmetic", "exact");
    return out;
}

// ---- theta suites -----------------------------------------------------------

// surviving/vanishing split at seeded ball points
inline SuiteResult suite_vanishing(int samples, std::uint64_t seed, double eps = 1e-12) {
    SuiteResult out;
    out.name = "vanishing";
    SplitMix64 rng(seed);
    double max_vanishing = 0.0, min_surviving = 1e300;
    for (int n = 0; n < samples; ++n) {
        BallPoint x = sample_ball_point(rng);
        SiegelPoint tau = embed_j(x);
        for (const auto& lab : all_labels()) {
            SixthChar c = characteristic_for_label(lab);
            double v = std::abs(theta_constant(c, tau, eps).value);
            if (lab.cls == LabelClass::TriplePairing) min_surviving = std::min(min_surviving, v);
            else max_vanishing = std::max(max_vanishing, v);
        }
    }
    out.pass = max_vanishing < 1e-9 && min_surviving > 1e-4;
    out.details.set("samples", samples);
    out.details.set("eps", eps);
    out.details.set("max_abs_nonsurviving", max_vanishing);
    out.details.set("threshold_nonsurviving", 1e-9);
    out.details.set("min_abs_surviving", min_surviving);
    out.details.set("threshold_surviving", 1e-4);
    return out;
}

// linear and cubic theta-cube identities at seeded ball points
inline SuiteResult suite_relations(int samples, std::uint64_t seed, double eps = 1e-12) {
    SuiteResult out;
    out.name = "relations";
    SplitMix64 rng(seed);
    double max_lin = 0.0, max_cub = 0.0;
    for (int n = 0; n < samples; ++n) {
        BallPoint x = sample_ball_point(rng);
        ThetaMapResult t = theta_map(x, eps);
        max_lin = std::max(max_lin, t.residuals.linear);
        max_cub = std::max(max_cub, t.residuals.cubic);
    }
    out.pass = max_lin < 1e-8 && max_cub < 1e-8;
    out.details.set("samples", samples);
    out.details.set("eps", eps);
    out.details.set("max_linear_residual", max_lin);
    out.details.set("max_cubic_residual", max_cub);
    out.details.set("threshold", 1e-8);
    return out;
}

// projective invariance under level-(1-w) words, chi-free ratio identities for
// the five transposition generators, and mirror vanishing
inline SuiteResult suite_invariance(int word_samples, std::uint64_t seed, double eps = 1e-12) {
    SuiteResult out;
    out.name = "invariance";
    SplitMix64 rng(seed);
    double max_word_dev = 0.0;
    for (int n = 0; n < word_samples; ++n) {
        for (;;) {
            BallPoint x = sample_ball_point(rng, 0.2, 0.8);
            auto word = sample_word(rng);
            CMat g = to_cmat(word_product(word, ReflExponent::Omega));
            BallPoint gx = apply_matrix(g, x);
            if (inside_ball(gx.x).margin < 0.02) continue; // image too close to the boundary; redraw
            YPoint a = theta_map(x, eps).y;
            YPoint b = theta_map(gx, eps).y;
            max_word_dev = std::max(max_word_dev, projective_compare(a, b).max_dev);
            break;
        }
    }

    // chi-free ratios: for g = R^zeta_{i,i+1} and Omega' = lift(g).Omega,
    //   theta^3(i,i+1;kl;mn)(O') / theta^3(ik;i+1,l;mn)(O')
    //     = - theta^3(i,i+1;kl;mn)(O) / theta^3(il;i+1,k;mn)(O)
    // and theta^6 scales by the cubed bilinear ratio.
    double max_ratio_dev = 0.0, max_scale_dev = 0.0;
    for (int i = 1; i <= 5; ++i) {
        std::array<int, 4> rest{};
        int cnt = 0;
        for (int v = 1; v <= 6; ++v)
            if (v != i && v != i + 1) rest[static_cast<std::size_t>(cnt++)] = v;
        int k = rest[0], l = rest[1], m = rest[2], n = rest[3];
        Matching M1 = Matching::of(i, i + 1, k, l, m, n);
        Matching M2 = Matching::of(i, k, i + 1, l, m, n);
        Matching M3 = Matching::of(i, l, i + 1, k, m, n);
        for (int trial = 0; trial < 3; ++trial) {
            BallPoint x = sample_ball_point(rng, 0.3, 0.7);
            SiegelPoint tau = embed_j(x);
            UnitaryReflection rz = reflection_for_pair(i, i + 1, ReflExponent::Zeta);
            CMat glift = lift_reflection(rz.root, ReflExponent::Zeta).to_cmat();
            MoebiusResult mv = moebius_act(glift, tau.tau);
            SiegelPoint taup = SiegelPoint::from(mv.tau);
            auto cube = [&](const Matching& mm, const SiegelPoint& at) {
                cdouble t = theta_constant(characteristic_for_matching(mm), at, eps).value;
                return t * t * t;
            };
            cdouble lhs = cube(M1, taup) / cube(M2, taup);
            cdouble rhs = -cube(M1, tau) / cube(M3, tau);
            max_ratio_dev = std::max(max_ratio_dev, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            // theta^6 scaling by chi^2 = (bilinear ratio)^3
            CMat rmat = to_cmat(rz.matrix);
            Vec4 rx{};
            for (int a2 = 0; a2 < 4; ++a2) {
                cdouble s = 0.0;
                for (int b2 = 0; b2 < 4; ++b2) s += rmat(a2, b2) * x.x[static_cast<std::size_t>(b2)];
                rx[static_cast<std::size_t>(a2)] = s;
            }
            auto bilinear = [](const Vec4& u) {
                cdouble s = 0.0;
                for (int t2 = 0; t2 < 4; ++t2) s += u[static_cast<std::size_t>(t2)] * kH[t2] * u[static_cast<std::size_t>(t2)];
                return s;
            };
            cdouble chi2 = bilinear(rx) / bilinear(x.x);
            chi2 = chi2 * chi2 * chi2;
            cdouble c1 = cube(M1, taup), c0 = cube(M1, tau);
            cdouble scale = (c1 * c1) / (c0 * c0);
            max_scale_dev = std::max(max_scale_dev, std::abs(scale - chi2) / std::max(1.0, std::abs(chi2)));
        }
    }

    // three labels containing the pair vanish on the pair's mirror
    double max_mirror = 0.0;
    for (const auto& r : root_table()) {
        for (int rep = 0; rep < 5; ++rep) {
            BallPoint x = sample_mirror_point(rng, r);
            SiegelPoint tau = embed_j(x);
            for (const auto& mm : canonical_matchings()) {
                if (!mm.contains_pair(r.i, r.j)) continue;
                double v = std::abs(theta_constant(characteristic_for_matching(mm), tau, eps).value);
                max_mirror = std::max(max_mirror, v);
            }
        }
    }

    out.pass = max_word_dev < 1e-7 && max_ratio_dev < 1e-8 && max_scale_dev < 1e-8 && max_mirror < 1e-9;
    out.details.set("word_samples", word_samples);
    out.details.set("eps", eps);
    out.details.set("max_word_invariance_dev", max_word_dev);
    out.details.set("threshold_word", 1e-7);
    out.details.set("max_chi_free_ratio_dev", max_ratio_dev);
    out.details.set("max_theta6_scale_dev", max_scale_dev);
    out.details.set("threshold_ratio", 1e-8);
    out.details.set("max_mirror_theta", max_mirror);
    out.details.set("threshold_mirror", 1e-9);
    return out;
}

// transposition equivariance of the theta map against the S6 action on P^14
inline SuiteResult suite_equivariance(int samples, std::uint64_t seed, double eps = 1e-12) {
    SuiteResult out;
    out.name = "equivariance";
    SplitMix64 rng(seed);
    double max_dev = 0.0, max_embed = 0.0;
    for (int n = 0; n < samples; ++n) {
        int i = 1 + static_cast<int>(rng.below(5));
        BallPoint x = sample_ball_point(rng, 0.25, 0.75);
        UnitaryReflection rz = reflection_for_pair(i, i + 1, ReflExponent::Zeta);
        CMat g4 = to_cmat(rz.matrix);
        BallPoint gx = apply_matrix(g4, x);
        // the embedding intertwines the two actions
        CMat g8 = lift_reflection(rz.root, ReflExponent::Zeta).to_cmat();
        MoebiusResult mv = moebius_act(g8, embed_j(x).tau);
        max_embed = std::max(max_embed, (mv.tau - embed_j(gx).tau).max_abs());
        YPoint lhs = theta_map(gx, eps).y;
        YPoint rhs = s6_act(perm_transposition(i, i + 1), theta_map(x, eps).y);
        max_dev = std::max(max_dev, projective_compare(rhs, lhs).max_dev);
    }
    out.pass = max_dev < 1e-8 && max_embed < 1e-9;
    out.details.set("samples", samples);
    out.details.set("eps", eps);
    out.details.set("max_equivariance_dev", max_dev);
    out.details.set("threshold", 1e-8);
    out.details.set("max_embedding_intertwine_dev", max_embed);
    return out;
}

// ---- quadrature / forward map / roundtrip -----------------------------------

inline SuiteResult suite_quadrature(int samples, std::uint64_t seed) {
    SuiteResult out;
    out.name = "quadrature";
    SplitMix64 rng(seed);
    double beta = std::tgamma(2.0 / 3.0) * std::tgamma(2.0 / 3.0) / std::tgamma(4.0 / 3.0);
    double max_rel = 0.0;
    for (int n = 0; n < samples; ++n) {
        double a = rng.uniform(-5.0, 4.0);
        double b = a + rng.uniform(0.1, 5.0);
        auto f = [](cdouble, cdouble za, cdouble zb) {
            return std::pow(za.real(), -1.0 / 3.0) * std::pow(-zb.real(), -1.0 / 3.0);
        };
        cdouble got = integrate_segment_singular(f, a, b, 1e-12).value;
        double expect = std::cbrt(b - a) * beta;
        max_rel = std::max(max_rel, std::abs(got - expect) / expect);
    }
    out.pass = max_rel < 1e-10;
    out.details.set("samples", samples);
    out.details.set("max_relative_error", max_rel);
    out.details.set("threshold", 1e-10);
    out.details.set("oracle", "(b-a)^(1/3) Gamma(2/3)^2 / Gamma(4/3)");
    return out;
}

inline SuiteResult suite_forward(int samples, std::uint64_t seed, double tol = 1e-10) {
    SuiteResult out;
    out.name = "forward";
    SplitMix64 rng(seed);
    double max_twist = 0.0, max_embed = 0.0, min_margin = 1e300;
    bool all_inside = true;
    for (int n = 0; n < samples; ++n) {
        BranchData bd = BranchData::from(sample_ordered_lambda(rng));
        FullPeriods fp = full_periods(bd, tol);
        max_twist = std::max(max_twist, fp.periods.twist_residual);
        max_embed = std::max(max_embed, fp.embed_match_residual);
        min_margin = std::min(min_margin, fp.periods.ball_margin);
        if (!(fp.periods.ball_margin > 0)) all_inside = false;
    }
    out.pass = max_twist < 1e-7 && all_inside && max_embed < 1e-6;
    out.details.set("samples", samples);
    out.details.set("tol", tol);
    out.details.set("max_twist_residual", max_twist);
    out.details.set("threshold_twist", 1e-7);
    out.details.set("ball_membership", all_inside);
    out.details.set("min_ball_margin", min_margin);
    out.details.set("max_period_matrix_vs_embedding", max_embed);
    out.details.set("threshold_embedding", 1e-6);
    return out;
}

inline SuiteResult suite_roundtrip(int samples, std::uint64_t seed, double tol = 1e-10,
                                   double eps = 1e-12) {
    SuiteResult out;
    out.name = "roundtrip";
    SplitMix64 rng(seed);
    double max_dev = 0.0, max_ell = 0.0;
    bool all_identity = true;
    {
        RoundtripReport r = roundtrip(BranchData::from({0, 1, 2, 3, 4, 5}), tol, eps);
        max_dev = std::max(max_dev, r.projective_deviation);
        max_ell = std::max(max_ell, r.ell_deviation);
        all_identity = all_identity && r.identity_relabeling;
    }
    for (int n = 0; n < samples; ++n) {
        BranchData bd = BranchData::from(sample_ordered_lambda(rng));
        RoundtripReport r = roundtrip(bd, tol, eps);
        max_dev = std::max(max_dev, r.projective_deviation);
        max_ell = std::max(max_ell, r.ell_deviation);
        all_identity = all_identity && r.identity_relabeling;
    }
    out.pass = max_dev < 1e-6 && max_ell < 1e-6; // identity relabeling reported as stretch
    out.details.set("samples", samples + 1);
    out.details.set("tol", tol);
    out.details.set("eps", eps);
    out.details.set("max_projective_deviation", max_dev);
    out.details.set("threshold", 1e-6);
    out.details.set("max_ell_deviation", max_ell);
    out.details.set("identity_relabeling", all_identity);
    return out;
}

} // namespace tricover

#endif
