#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "tricover/inverse.hpp"
#include "tricover/suites.hpp"

using namespace tricover;

TEST_CASE("theta map satisfies the defining relations of the target variety") {
    SplitMix64 rng(137);
    for (int t = 0; t < 5; ++t) {
        BallPoint x = sample_ball_point(rng);
        ThetaMapResult r = theta_map(x, 1e-12);
        CHECK(r.residuals.linear < 1e-8);
        CHECK(r.residuals.cubic < 1e-8);
    }
}

TEST_CASE("coordinates containing a pair vanish on that pair's mirror") {
    SplitMix64 rng(139);
    const Root& r12 = root_for_pair(1, 2);
    BallPoint x = sample_mirror_point(rng, r12);
    ThetaMapResult tm = theta_map(x, 1e-12);
    double off_scale = tm.y.max_abs();
    for (const auto& m : canonical_matchings()) {
        double v = std::abs(tm.y[m]) / off_scale;
        if (m.contains_pair(1, 2)) CHECK(v < 1e-9);
        else CHECK(v > 1e-6);
    }
}

TEST_CASE("theta map is invariant under level-(1-w) words, projectively") {
    SplitMix64 rng(149);
    for (int t = 0; t < 3; ++t) {
        BallPoint x = sample_ball_point(rng, 0.3, 0.7);
        auto word = sample_word(rng, 3);
        CMat g = to_cmat(word_product(word));
        BallPoint gx = apply_matrix(g, x);
        if (inside_ball(gx.x).margin < 0.05) continue;
        CHECK(projective_compare(theta_map(x, 1e-12).y, theta_map(gx, 1e-12).y).max_dev < 1e-7);
    }
}

TEST_CASE("transposition equivariance against the S6 action") {
    SplitMix64 rng(151);
    BallPoint x = sample_ball_point(rng, 0.3, 0.7);
    for (int i : {1, 4}) {
        CMat g = to_cmat(reflection_for_pair(i, i + 1, ReflExponent::Zeta).matrix);
        BallPoint gx = apply_matrix(g, x);
        YPoint lhs = theta_map(gx, 1e-12).y;
        YPoint rhs = s6_act(perm_transposition(i, i + 1), theta_map(x, 1e-12).y);
        CHECK(projective_compare(rhs, lhs).max_dev < 1e-8);
    }
}

TEST_CASE("ell recovery: generic two-route agreement and the symmetric-point formulas") {
    SplitMix64 rng(157);
    BallPoint x = sample_ball_point(rng, 0.3, 0.7);
    EllResult er = ell_from_theta(x, 1e-12);
    CHECK(er.cross_check_dev < 1e-7);

    // at x = (0,0,0,1) the ratio labels sit on mirrors: mirror-proximity error
    BallPoint sym = BallPoint::from({cdouble(0), cdouble(0), cdouble(0), cdouble(1)});
    CHECK_THROWS_AS(ell_from_theta(sym, 1e-12), mirror_error);
}

TEST_CASE("near the v13 mirror the l1 numerator vanishes") {
    SplitMix64 rng(167);
    BallPoint x = sample_mirror_point(rng, root_for_pair(1, 3));
    // every l_i numerator contains the pair 13, so all three ratios signal 0,
    // while the denominators stay clear of their mirrors (no mirror error)
    EllResult er = ell_from_theta(x, 1e-12);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(er.ell[(std::size_t)i]) < 1e-8);
}

TEST_CASE("ell values at a genuine period point match the cross ratios") {
    BranchData bd = BranchData::from({0.0, 0.7, 1.9, 3.1, 4.6, 5.9});
    CyclePeriods p = psi_forward(bd, 1e-11);
    BallPoint x = BallPoint::from(p.xA);
    EllResult er = ell_from_theta(x, 1e-12);
    auto ell_cfg = normalize_config(ConfigPoint::from_affine(bd.lambda));
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(er.ell[(std::size_t)i] - ell_cfg[(std::size_t)i]) <
              1e-7 * std::max(1.0, std::abs(ell_cfg[(std::size_t)i])));
}

TEST_CASE("roundtrip at the integer configuration: identity relabeling, tight match") {
    RoundtripReport r = roundtrip(BranchData::from({0, 1, 2, 3, 4, 5}), 1e-11, 1e-13);
    CHECK(r.projective_deviation < 1e-6);
    CHECK(r.projective_deviation < 1e-10); // far tighter in practice
    CHECK(r.identity_relabeling);
    CHECK(r.ell_deviation < 1e-6);
    CHECK(std::abs(r.ell_config[0] - cdouble(4.0 / 3.0)) < 1e-12);
    CHECK(std::abs(r.ell_config[1] - cdouble(3.0 / 2.0)) < 1e-12);
    CHECK(std::abs(r.ell_config[2] - cdouble(8.0 / 5.0)) < 1e-12);
}

TEST_CASE("roundtrip at a random ordered configuration") {
    SplitMix64 rng(163);
    RoundtripReport r = roundtrip(BranchData::from(sample_ordered_lambda(rng)), 1e-10, 1e-12);
    CHECK(r.projective_deviation < 1e-6);
    CHECK(r.identity_relabeling);
    CHECK(r.ell_deviation < 1e-6);
}

TEST_CASE("degenerate branch data is rejected before any integration") {
    CHECK_THROWS_AS(roundtrip(BranchData::from({0, 1, 1, 3, 4, 5}), 1e-10, 1e-12), input_error);
}
