#include <catch2/catch.hpp>

#include "tricover/ball.hpp"
#include "tricover/forms.hpp"
#include "tricover/rng.hpp"
#include "tricover/roots.hpp"
#include "tricover/suites.hpp"
#include "tricover/symplectic.hpp"

using namespace tricover;

TEST_CASE("hermitian pairing on the signature form") {
    Vec4 e4{cdouble(0), cdouble(0), cdouble(0), cdouble(1)};
    Vec4 e1{cdouble(1), cdouble(0), cdouble(0), cdouble(0)};
    Vec4 ones{cdouble(1), cdouble(1), cdouble(1), cdouble(1)};
    CHECK(hermitian_pairing(e4, e4) == cdouble(-1.0));
    CHECK(hermitian_pairing(e1, e4) == cdouble(0.0));
    CHECK(hermitian_pairing(ones, ones) == cdouble(2.0));
}

TEST_CASE("pairing is conjugate symmetric and real on the diagonal") {
    SplitMix64 rng(5);
    for (int t = 0; t < 100; ++t) {
        Vec4 u{}, v{};
        for (int i = 0; i < 4; ++i) {
            u[(std::size_t)i] = rng.complex_gaussian();
            v[(std::size_t)i] = rng.complex_gaussian();
        }
        cdouble a = hermitian_pairing(u, v), b = hermitian_pairing(v, u);
        CHECK(std::abs(a - std::conj(b)) < 1e-13);
        CHECK(std::abs(hermitian_pairing(u, u).imag()) < 1e-14);
    }
}

TEST_CASE("positive definiteness: identity, signature form, embedded imaginary part") {
    CHECK(is_positive_definite(CMat::identity(4)).positive);
    CHECK(is_positive_definite(CMat::identity(4)).lambda_min == Approx(1.0));
    CHECK_FALSE(is_positive_definite(hermitian_form_H()).positive);
    // Im j((0,0,0,1)) = (sqrt3/2) I_4: diagonal, eigenvalues read off directly
    BallPoint p = BallPoint::from({cdouble(0), cdouble(0), cdouble(0), cdouble(1)});
    SiegelPoint sp = embed_j(p);
    auto pd = is_positive_definite(sp.tau.imag_part());
    CHECK(pd.positive);
    CHECK(pd.lambda_min == Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(pd.min_pivot == Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("non-Hermitian input is rejected") {
    CMat m = CMat::identity(4);
    m(0, 1) = cdouble(0.5, 0.0); // m(1,0) stays 0
    CHECK_THROWS_AS(is_positive_definite(m), input_error);
}

TEST_CASE("moebius action: identity element and W-fixedness of embedded points") {
    BallPoint p = BallPoint::from({cdouble(0.2, 0.1), cdouble(-0.1, 0.3), cdouble(0.05, 0), cdouble(1)});
    SiegelPoint sp = embed_j(p);
    auto r = moebius_act(CMat::identity(8), sp.tau);
    CHECK((r.tau - sp.tau).max_abs() < 1e-14);
    CHECK(std::abs(r.det_factor - cdouble(1.0)) < 1e-14);

    auto w = moebius_act(matrix_W().to_cmat(), sp.tau);
    CHECK((w.tau - sp.tau).max_abs() < 1e-10);
    CHECK(std::abs(w.det_factor - kOmega) < 1e-10); // det(C Omega + D) = omega
}

TEST_CASE("moebius action is a left action along random generator words") {
    SplitMix64 rng(17);
    for (int t = 0; t < 20; ++t) {
        const Root& r1 = root_table()[rng.below(15)];
        const Root& r2 = root_table()[rng.below(15)];
        CMat g = lift_reflection(r1.v, ReflExponent::Omega).to_cmat();
        CMat h = lift_reflection(r2.v, ReflExponent::Zeta).to_cmat();
        BallPoint p = sample_ball_point(rng, 0.3, 0.8);
        SiegelPoint sp = embed_j(p);
        CMat gh = g * h;
        auto lhs = moebius_act(gh, sp.tau);
        auto rhs = moebius_act(g, moebius_act(h, sp.tau).tau);
        CHECK((lhs.tau - rhs.tau).max_abs() < 1e-10);
    }
}

TEST_CASE("moebius rejects bad inputs") {
    CMat not_symplectic = CMat::identity(8);
    not_symplectic(0, 0) = 2.0;
    BallPoint p = BallPoint::from({cdouble(0.1), cdouble(0.1), cdouble(0), cdouble(1)});
    CHECK_THROWS_AS(moebius_act(not_symplectic, embed_j(p).tau), input_error);
    CMat tau = CMat::identity(4); // real, Im == 0: not a Siegel point
    CHECK_THROWS_AS(moebius_act(matrix_W().to_cmat(), tau), input_error);
}
