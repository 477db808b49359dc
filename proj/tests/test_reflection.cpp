#include <catch2/catch.hpp>

#include "tricover/ball.hpp"
#include "tricover/rng.hpp"
#include "tricover/roots.hpp"
#include "tricover/suites.hpp"

using namespace tricover;

TEST_CASE("root table entries from the generator list") {
    const Root& r12 = root_for_pair(1, 2);
    CHECK(r12.v == EisVec4{Eisenstein(1), Eisenstein(0), Eisenstein(0), Eisenstein(0)});
    const Root& r35 = root_for_pair(3, 5); // (0, -w, w, 1)
    CHECK(r35.v == EisVec4{Eisenstein(0), Eisenstein(0, -1), Eisenstein(0, 1), Eisenstein(1)});
    const Root& r56 = root_for_pair(5, 6);
    CHECK(r56.v == EisVec4{Eisenstein(0), Eisenstein(0), Eisenstein(1), Eisenstein(0)});
    CHECK_THROWS_AS(root_for_pair(0, 3), input_error);
    CHECK_THROWS_AS(root_for_pair(2, 2), input_error);
    for (const auto& r : root_table()) CHECK(root_norm(r.v) == Eisenstein(1)); // all table roots have norm 1
}

TEST_CASE("reflection with root e1 is diag(exponent, 1, 1, 1)") {
    auto r = make_reflection(root_for_pair(1, 2).v, ReflExponent::Omega);
    CHECK(r.matrix.is_integral());
    EisMat expect = EisMat::identity(4);
    expect(0, 0) = Eisenstein::omega();
    CHECK(r.matrix.num() == expect);
    auto z = make_reflection(root_for_pair(1, 2).v, ReflExponent::Zeta);
    expect(0, 0) = Eisenstein::zeta();
    CHECK(z.matrix.num() == expect);
}

TEST_CASE("mirror vectors are fixed exactly") {
    // t(conj v12) H x = 0 for x = e2, e3, e4
    auto r = make_reflection(root_for_pair(1, 2).v, ReflExponent::Zeta);
    for (int k = 1; k < 4; ++k) {
        EisMat x(4, 1);
        x(k, 0) = Eisenstein(1);
        CHECK(r.matrix.num() * x == x);
    }
    // eigenvector property: R v = exponent v
    for (const auto& root : root_table()) {
        auto rw = make_reflection(root.v, ReflExponent::Omega);
        EisMat v(4, 1);
        for (int i = 0; i < 4; ++i) v(i, 0) = root.v[(std::size_t)i];
        CHECK(rw.matrix.num() * v == Eisenstein::omega() * v);
    }
    // a non-coordinate mirror: v35 = (0, -w, w, 1); both x with t(conj v) H x = 0
    // below are fixed exactly
    auto r35 = make_reflection(root_for_pair(3, 5).v, ReflExponent::Omega);
    for (const auto& xv : {EisVec4{Eisenstein(1), Eisenstein(0), Eisenstein(0), Eisenstein(0)},
                           EisVec4{Eisenstein(0), Eisenstein(1), Eisenstein(1), Eisenstein(0)}}) {
        EisMat x(4, 1);
        for (int i = 0; i < 4; ++i) x(i, 0) = xv[(std::size_t)i];
        CHECK(r35.matrix.num() * x == x);
    }
}

TEST_CASE("isotropic roots are rejected") {
    // v = (1,0,0,1) has t(conj v) H v = 1 - 1 = 0
    EisVec4 v{Eisenstein(1), Eisenstein(0), Eisenstein(0), Eisenstein(1)};
    CHECK_THROWS_AS(make_reflection(v, ReflExponent::Omega), domain_error);
}

TEST_CASE("non-unit norms produce exact rational reflections") {
    // v = (1,1,0,0): t(conj v) H v = 2
    EisVec4 v{Eisenstein(1), Eisenstein(1), Eisenstein(0), Eisenstein(0)};
    auto r = make_reflection(v, ReflExponent::Omega);
    CHECK(r.matrix.den() == BigInt(2));
    CHECK(preserves_H(r.matrix));
    EisMat vv(4, 1);
    for (int i = 0; i < 4; ++i) vv(i, 0) = v[(std::size_t)i];
    EisMatQ rv = r.matrix * EisMatQ(vv);
    CHECK(rv == EisMatQ(Eisenstein::omega() * vv));
}

TEST_CASE("exact group relation report is all green") {
    auto rep = verify_group_relations();
    INFO("failures: " << (rep.failures.empty() ? "(none)" : rep.failures.front()));
    CHECK(rep.braids);
    CHECK(rep.congruence);
    CHECK(rep.unitarity);
    CHECK(rep.squares);
    CHECK(rep.determinants);
    CHECK(rep.mirror_rank);
    CHECK(rep.all());
}

TEST_CASE("braid relation spot check i = 2") {
    EisMatQ a = reflection_for_pair(1, 2, ReflExponent::Zeta).matrix;
    EisMatQ b = reflection_for_pair(2, 3, ReflExponent::Zeta).matrix;
    CHECK(a * b * a == b * a * b);
    CHECK_FALSE(a * b == b * a); // the relation is not commutativity
}

TEST_CASE("R^omega_12 - I is divisible by 1 - omega entrywise") {
    auto r = make_reflection(root_for_pair(1, 2).v, ReflExponent::Omega);
    EisMatQ d = r.matrix - EisMatQ::identity(4);
    CHECK(d.num()(0, 0) == Eisenstein(-1, 1)); // w - 1 = -(1 - w)
    CHECK(r.matrix.num().congruent_identity_mod_one_minus_omega());
}

TEST_CASE("generators preserve the ball on random points") {
    SplitMix64 rng(47);
    for (const auto& root : root_table()) {
        CMat g = to_cmat(make_reflection(root.v, ReflExponent::Omega).matrix);
        for (int t = 0; t < 5; ++t) {
            BallPoint x = sample_ball_point(rng);
            BallPoint gx = apply_matrix(g, x); // would throw if outside
            CHECK(inside_ball(gx.x).inside);
        }
    }
}

TEST_CASE("words in generators evaluate left to right") {
    EisMatQ w = word_product({{1, 2}, {3, 4}});
    EisMatQ direct = reflection_for_pair(1, 2, ReflExponent::Omega).matrix *
                     reflection_for_pair(3, 4, ReflExponent::Omega).matrix;
    CHECK(w == direct);
    CHECK(preserves_H(w));
    CHECK(w.num().congruent_identity_mod_one_minus_omega()); // the congruence subgroup is a group
}
