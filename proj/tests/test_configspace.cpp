#include <catch2/catch.hpp>

#include "tricover/configspace.hpp"
#include "tricover/rng.hpp"

using namespace tricover;

namespace {
ConfigPoint random_config(SplitMix64& rng) {
    for (;;) {
        CMat m(2, 6);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 6; ++c) m(r, c) = rng.complex_gaussian();
        try {
            return ConfigPoint::from(m);
        } catch (const domain_error&) {
        }
    }
}
} // namespace

TEST_CASE("brackets are 2x2 minors, antisymmetric") {
    ConfigPoint p = ConfigPoint::from_affine({0, 1, 2, 3, 4, 5});
    CHECK(p.bracket(1, 3) == cdouble(2.0)); // lambda_3 - lambda_1
    CHECK(p.bracket(3, 1) == -p.bracket(1, 3));
    // normalized matrix of the cross-ratio form: columns (0;1),(1;0) give <12> = -1
    CMat m(2, 6);
    m(0, 0) = 0; m(1, 0) = 1;
    m(0, 1) = 1; m(1, 1) = 0;
    m(0, 2) = 1; m(1, 2) = 1;
    m(0, 3) = 1; m(1, 3) = 2;
    m(0, 4) = 1; m(1, 4) = 3;
    m(0, 5) = 1; m(1, 5) = 5;
    ConfigPoint q = ConfigPoint::from(m);
    CHECK(q.bracket(1, 2) == cdouble(-1.0));
}

TEST_CASE("iota values and the linear identity at the integer configuration") {
    ConfigPoint p = ConfigPoint::from_affine({0, 1, 2, 3, 4, 5});
    YPoint y = iota(p);
    CHECK(y[Matching::of(1, 2, 3, 4, 5, 6)] == cdouble(1.0));  // 1*1*1
    CHECK(y[Matching::of(1, 3, 2, 4, 5, 6)] == cdouble(4.0));  // 2*2*1
    CHECK(y[Matching::of(1, 4, 2, 3, 5, 6)] == cdouble(3.0));  // 3*1*1
    CHECK(std::abs(y[Matching::of(1, 2, 3, 4, 5, 6)] - y[Matching::of(1, 3, 2, 4, 5, 6)] +
                   y[Matching::of(1, 4, 2, 3, 5, 6)]) < 1e-14); // 1 - 4 + 3 = 0
}

TEST_CASE("iota images satisfy all linear and cubic relations") {
    SplitMix64 rng(79);
    for (int t = 0; t < 20; ++t) {
        YPoint y = iota(random_config(rng));
        YResiduals r = y_relation_residuals(y);
        CHECK(r.linear < 1e-12);
        CHECK(r.cubic < 1e-12);
    }
}

TEST_CASE("a perturbed coordinate breaks some linear identity") {
    ConfigPoint p = ConfigPoint::from_affine({0, 1, 2, 3, 4, 5});
    YPoint y = iota(p).normalized();
    y.y[0] += 0.1;
    YResiduals r = y_relation_residuals(y);
    CHECK(r.linear >= 0.1 / (1.0 + 0.1) - 1e-9); // renormalization can only shrink it slightly
}

TEST_CASE("GL2 action and column scaling leave iota projectively invariant") {
    SplitMix64 rng(83);
    for (int t = 0; t < 20; ++t) {
        ConfigPoint p = random_config(rng);
        CMat g(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) g(i, j) = rng.complex_gaussian();
        if (std::abs(g.det()) < 0.05) continue;
        CMat gm = g * p.m;
        // also rescale each column independently
        CMat gs(2, 6);
        for (int c = 0; c < 6; ++c) {
            cdouble s = rng.complex_gaussian();
            if (std::abs(s) < 0.1) s += 1.0;
            gs(0, c) = gm(0, c) * s;
            gs(1, c) = gm(1, c) * s;
        }
        YPoint a = iota(p), b = iota(ConfigPoint::from(gs));
        CHECK(projective_compare(a, b).max_dev < 1e-10);
        // left GL2 action alone multiplies all coordinates by det(g)^3
        YPoint c = iota(ConfigPoint::from(gm));
        cdouble d3 = g.det() * g.det() * g.det();
        double dev = 0;
        for (int i = 0; i < 15; ++i) dev = std::max(dev, std::abs(c.y[(std::size_t)i] - d3 * a.y[(std::size_t)i]));
        CHECK(dev < 1e-9 * std::max(1.0, c.max_abs()));
    }
}

TEST_CASE("s6 action: identity, transposition sign, compatibility with column permutation") {
    SplitMix64 rng(89);
    ConfigPoint p = random_config(rng);
    YPoint y = iota(p);
    YPoint id = s6_act(perm_identity(), y);
    for (int i = 0; i < 15; ++i) CHECK(id.y[(std::size_t)i] == y.y[(std::size_t)i]);
    // sigma = (12) flips the sign of coordinates whose matching contains the pair 12
    YPoint t12 = s6_act(perm_transposition(1, 2), y);
    CHECK(std::abs(t12[Matching::of(1, 2, 3, 4, 5, 6)] + y[Matching::of(1, 2, 3, 4, 5, 6)]) < 1e-14);
    // arbitrary sigma matches iota of permuted columns
    Perm6 sigma{3, 1, 2, 6, 4, 5};
    YPoint lhs = s6_act(sigma, y);
    YPoint rhs = iota(permute_columns(sigma, p));
    double dev = 0;
    for (int i = 0; i < 15; ++i) dev = std::max(dev, std::abs(lhs.y[(std::size_t)i] - rhs.y[(std::size_t)i]));
    CHECK(dev < 1e-10 * std::max(1.0, y.max_abs()));
}

TEST_CASE("s6 action composes exactly in the index bookkeeping") {
    SplitMix64 rng(97);
    YPoint y{};
    for (int i = 0; i < 15; ++i) y.y[(std::size_t)i] = rng.complex_gaussian();
    for (int t = 0; t < 30; ++t) {
        Perm6 s = perm_identity(), u = perm_identity();
        for (int k = 5; k > 0; --k) {
            std::swap(s[(std::size_t)k], s[rng.below(static_cast<std::uint64_t>(k + 1))]);
            std::swap(u[(std::size_t)k], u[rng.below(static_cast<std::uint64_t>(k + 1))]);
        }
        YPoint a = s6_act(perm_compose(s, u), y);
        YPoint b = s6_act(s, s6_act(u, y));
        for (int i = 0; i < 15; ++i) CHECK(a.y[(std::size_t)i] == b.y[(std::size_t)i]);
    }
}

TEST_CASE("normal form: fixed point and cross-ratio oracle") {
    CMat m(2, 6);
    m(0, 0) = 0; m(1, 0) = 1; // infinity
    m(0, 1) = 1; m(1, 1) = 0;
    m(0, 2) = 1; m(1, 2) = 1;
    m(0, 3) = 1; m(1, 3) = 2;
    m(0, 4) = 1; m(1, 4) = 3;
    m(0, 5) = 1; m(1, 5) = 5;
    auto ell = normalize_config(ConfigPoint::from(m));
    CHECK(std::abs(ell[0] - cdouble(2.0)) < 1e-14);
    CHECK(std::abs(ell[1] - cdouble(3.0)) < 1e-14);
    CHECK(std::abs(ell[2] - cdouble(5.0)) < 1e-14);

    // affine configuration: the explicit fractional-linear map mu fixing
    // (l1,l2,l3) -> (inf,0,1) gives the oracle values
    std::array<double, 6> l{0, 1, 2, 3, 4, 5};
    auto mu = [&](double z) { return (z - l[1]) * (l[2] - l[0]) / ((z - l[0]) * (l[2] - l[1])); };
    auto got = normalize_config(ConfigPoint::from_affine(l));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(got[(std::size_t)i] - mu(l[(std::size_t)(3 + i)])) < 1e-13);

    // column scaling leaves the normal form unchanged
    SplitMix64 rng(101);
    CMat ms(2, 6);
    for (int c = 0; c < 6; ++c) {
        cdouble s = rng.complex_gaussian() + cdouble(2.0);
        ms(0, c) = m(0, c) * s;
        ms(1, c) = m(1, c) * s;
    }
    auto ell2 = normalize_config(ConfigPoint::from(ms));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ell2[(std::size_t)i] - ell[(std::size_t)i]) < 1e-12);
}

TEST_CASE("iota of the normal form is projectively iota of the original") {
    SplitMix64 rng(103);
    for (int t = 0; t < 10; ++t) {
        ConfigPoint p = random_config(rng);
        auto ell = normalize_config(p);
        CMat m(2, 6);
        m(0, 0) = 0; m(1, 0) = 1;
        m(0, 1) = 1; m(1, 1) = 0;
        m(0, 2) = 1; m(1, 2) = 1;
        for (int i = 0; i < 3; ++i) {
            m(0, 3 + i) = 1;
            m(1, 3 + i) = ell[(std::size_t)i];
        }
        CHECK(projective_compare(iota(p), iota(ConfigPoint::from(m))).max_dev < 1e-9);
    }
}

TEST_CASE("degenerate configurations are rejected") {
    CHECK_THROWS_AS(ConfigPoint::from_affine({0, 0, 1, 2, 3, 4}), domain_error);
}
