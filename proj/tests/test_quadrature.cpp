#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "tricover/quadrature.hpp"
#include "tricover/rng.hpp"

using namespace tricover;

TEST_CASE("Beta(2/3, 2/3) endpoint-singular oracle") {
    auto f = [](cdouble, cdouble za, cdouble zb) {
        return std::pow(za.real(), -1.0 / 3.0) * std::pow(-zb.real(), -1.0 / 3.0);
    };
    cdouble got = integrate_segment_singular(f, 0.0, 1.0, 1e-13).value;
    CHECK(std::abs(got - cdouble(oracles::beta_two_thirds())) < 1e-12);
}

TEST_CASE("scaling law (b - a)^(1/3) on random intervals") {
    SplitMix64 rng(107);
    auto f = [](cdouble, cdouble za, cdouble zb) {
        return std::pow(za.real(), -1.0 / 3.0) * std::pow(-zb.real(), -1.0 / 3.0);
    };
    for (int t = 0; t < 10; ++t) {
        double a = rng.uniform(-4.0, 4.0);
        double b = a + rng.uniform(0.2, 4.0);
        cdouble got = integrate_segment_singular(f, a, b, 1e-12).value;
        double expect = std::cbrt(b - a) * oracles::beta_two_thirds();
        CHECK(std::abs(got - cdouble(expect)) < 1e-10 * expect);
    }
}

TEST_CASE("reversing orientation negates the integral") {
    auto f = [](cdouble z) { return std::exp(-z * z); };
    cdouble fwd = integrate_segment(f, -1.0, 2.0, 1e-12).value;
    cdouble bwd = integrate_segment(f, 2.0, -1.0, 1e-12).value;
    CHECK(std::abs(fwd + bwd) < 1e-13);
}

TEST_CASE("smooth gaussian against the erf oracle") {
    auto f = [](cdouble z) { return std::exp(-z * z); };
    cdouble got = integrate_segment(f, 0.0, 1.5, 1e-13).value;
    double expect = std::sqrt(oracles::pi) / 2 * std::erf(1.5);
    CHECK(std::abs(got - cdouble(expect)) < 1e-13);
}

TEST_CASE("complex line segments integrate exact antiderivatives") {
    auto f = [](cdouble z) { return z * z; };
    cdouble a(0.0, -1.0), b(2.0, 1.0);
    cdouble got = integrate_segment(f, a, b, 1e-13).value;
    cdouble expect = (b * b * b - a * a * a) / 3.0;
    CHECK(std::abs(got - expect) < 1e-12);
}

TEST_CASE("non-integrable endpoint fails with a quadrature error") {
    auto f = [](cdouble, cdouble za, cdouble) { return std::pow(std::abs(za), -1.2); };
    CHECK_THROWS_AS(integrate_segment_singular(f, 0.0, 1.0, 1e-12), quadrature_error);
}

TEST_CASE("result reports level and evaluation counts") {
    auto f = [](cdouble z) { return std::cos(z); };
    QuadratureResult r = integrate_segment(f, 0.0, 1.0, 1e-12);
    CHECK(r.level_used >= 6);
    CHECK(r.level_used <= 12);
    CHECK(r.evaluations > 0);
    CHECK(std::abs(r.value - cdouble(std::sin(1.0))) < 1e-13);
}
