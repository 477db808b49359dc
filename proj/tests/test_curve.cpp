#include <catch2/catch.hpp>

#include <fstream>
#include <sstream>

#include "tricover/curve.hpp"
#include "tricover/rng.hpp"

using namespace tricover;

namespace {
const BranchData bd_int = BranchData::from({0, 1, 2, 3, 4, 5});

SheetPath pochhammer_loop(const BranchData& bd, int gap, int sheet, double r, int arc_segments = 10) {
    // strand right on `sheet`, full ccw polygon around lambda_{gap+1} (sheet+1),
    // strand left, full cw polygon around lambda_gap (back to `sheet`)
    double la = bd.lambda[(std::size_t)(gap - 1)], lb = bd.lambda[(std::size_t)gap];
    SheetPath p;
    cdouble p1(la + r, 0.0), p2(lb - r, 0.0);
    p.segments.push_back({p1, p2, sheet});
    int s = sheet;
    for (int k = 0; k < arc_segments; ++k) { // ccw around lb starting at angle pi
        double t0 = kPi + 2 * kPi * k / arc_segments;
        double t1 = kPi + 2 * kPi * (k + 1) / arc_segments;
        cdouble a = lb + r * cdouble(std::cos(t0), std::sin(t0));
        cdouble b = lb + r * cdouble(std::cos(t1), std::sin(t1));
        PathSegment seg{a, b, s};
        p.segments.push_back(seg);
        s = sheet_after_segment(bd, seg);
    }
    p.segments.push_back({p2, p1, s});
    for (int k = 0; k < arc_segments; ++k) { // cw around la starting at angle 0
        double t0 = -2 * kPi * k / arc_segments;
        double t1 = -2 * kPi * (k + 1) / arc_segments;
        cdouble a = la + r * cdouble(std::cos(t0), std::sin(t0));
        cdouble b = la + r * cdouble(std::cos(t1), std::sin(t1));
        PathSegment seg{a, b, s};
        p.segments.push_back(seg);
        s = sheet_after_segment(bd, seg);
    }
    return p;
}
} // namespace

TEST_CASE("w_on_sheet cubes to the defining product, sheets differ by omega") {
    SplitMix64 rng(109);
    for (int t = 0; t < 50; ++t) {
        cdouble z(rng.uniform(-2, 7), rng.uniform(-3, 3));
        if (std::abs(z.imag()) < 1e-3) z += cdouble(0, 0.5);
        cdouble prod = 1.0;
        for (double l : bd_int.lambda) prod *= z - l;
        for (int s = 0; s < 3; ++s) {
            cdouble w = w_on_sheet(bd_int, z, s);
            CHECK(std::abs(w * w * w - prod) < 1e-9 * std::max(1.0, std::abs(prod)));
            CHECK(std::abs(w_on_sheet(bd_int, z, s + 1) - kOmega * w) < 1e-12 * std::abs(w));
        }
    }
    CHECK_THROWS_AS(w_zero(bd_int, cdouble(2.0, 0.0)), degeneracy_error);
}

TEST_CASE("analytic continuation around one branch point multiplies w by omega") {
    // follow the nearest cube root along a fine ccw circle; independent of the
    // ray-crossing bookkeeping
    double r = 0.37;
    cdouble center(3.0, 0.0); // lambda_4
    int steps = 4000;
    cdouble z0 = center + r;
    cdouble w = w_on_sheet(bd_int, z0, 0);
    cdouble cur = w;
    for (int k = 1; k <= steps; ++k) {
        double t = 2 * kPi * k / steps;
        cdouble z = center + r * cdouble(std::cos(t), std::sin(t));
        cdouble base = w_zero(bd_int, z);
        cdouble best = base;
        for (int s = 1; s < 3; ++s)
            if (std::abs(omega_pow(s) * base - cur) < std::abs(best - cur)) best = omega_pow(s) * base;
        cur = best;
    }
    CHECK(std::abs(cur - kOmega * w) < 1e-6 * std::abs(w));
}

TEST_CASE("crossing rule matches continuity across a ray") {
    // walk across the ray above lambda_2 = 1 at height 0.7, right to left
    cdouble zr(1.0 + 1e-6, 0.7), zl(1.0 - 1e-6, 0.7);
    for (int s = 0; s < 3; ++s) {
        cdouble before = w_on_sheet(bd_int, zr, s);
        cdouble after = w_on_sheet(bd_int, zl, s + 1); // rule: right-to-left raises the sheet
        CHECK(std::abs(after - before) < 1e-5 * std::abs(before));
    }
    PathSegment seg{cdouble(1.5, 0.5), cdouble(0.5, 0.5), 0};
    CHECK(sheet_after_segment(bd_int, seg) == 1);
    PathSegment seg2{cdouble(0.5, 0.5), cdouble(1.5, 0.5), 0};
    CHECK(sheet_after_segment(bd_int, seg2) == -1);
    PathSegment below{cdouble(1.5, -0.5), cdouble(0.5, -0.5), 0};
    CHECK(sheet_after_segment(bd_int, below) == 0); // no cuts below the axis
}

TEST_CASE("contractible loops integrate to zero") {
    // rectangle in the lower half plane, one sheet, no crossings
    SheetPath p;
    p.segments.push_back({cdouble(0.2, -0.4), cdouble(4.8, -0.4), 1});
    p.segments.push_back({cdouble(4.8, -0.4), cdouble(4.8, -2.0), 1});
    p.segments.push_back({cdouble(4.8, -2.0), cdouble(0.2, -2.0), 1});
    p.segments.push_back({cdouble(0.2, -2.0), cdouble(0.2, -0.4), 1});
    CHECK(std::abs(cycle_period(bd_int, p, 1e-11)) < 1e-10);

    // zigzag crossing the lambda_2 ray twice with opposite directions encloses
    // nothing: the sheet returns and the integral vanishes
    SheetPath q;
    q.segments.push_back({cdouble(1.2, 0.5), cdouble(0.8, 0.5), 0}); // right-to-left: sheet -> 1
    q.segments.push_back({cdouble(0.8, 0.5), cdouble(0.8, 1.0), 1});
    q.segments.push_back({cdouble(0.8, 1.0), cdouble(1.2, 1.0), 1}); // left-to-right: sheet -> 0
    q.segments.push_back({cdouble(1.2, 1.0), cdouble(1.2, 0.5), 0});
    CHECK(std::abs(cycle_period(bd_int, q, 1e-10)) < 1e-9);

    // a loop around a single branch point does not close on one sheet
    SheetPath open_loop;
    open_loop.segments.push_back({cdouble(0.6, -0.5), cdouble(1.4, -0.5), 0});
    open_loop.segments.push_back({cdouble(1.4, -0.5), cdouble(1.4, 0.8), 0});
    open_loop.segments.push_back({cdouble(1.4, 0.8), cdouble(0.6, 0.8), 0}); // crosses the ray: sheet 1
    open_loop.segments.push_back({cdouble(0.6, 0.8), cdouble(0.6, -0.5), 0}); // declared 0: mismatch
    CHECK_THROWS_AS(cycle_period(bd_int, open_loop, 1e-10), input_error);
}

TEST_CASE("elementary cycle periods: segment formula vs generic path integration") {
    GapIntegrals g = gap_integrals(bd_int, 1e-12, false);
    for (int gap = 1; gap <= 5; ++gap) {
        for (int s = 0; s < 3; ++s) {
            for (long coeff : {1L, -1L}) {
                CycleCombo c;
                c.add_term(gap, s, coeff);
                cdouble direct = c.period(g, 0);
                auto paths = c.term_paths(bd_int);
                REQUIRE(paths.size() == 1);
                cdouble via_path = cycle_period(bd_int, paths.front(), 1e-12);
                CHECK(std::abs(direct - via_path) < 1e-10 * std::max(1.0, std::abs(direct)));
            }
        }
    }
    // and against the finite-radius pochhammer realization (pure homotopy)
    for (int gap : {1, 3}) {
        CycleCombo c;
        c.add_term(gap, 0, 1);
        cdouble direct = c.period(g, 0);
        cdouble loop = cycle_period(bd_int, pochhammer_loop(bd_int, gap, 0, 0.2), 1e-11);
        CHECK(std::abs(direct - loop) < 1e-9 * std::max(1.0, std::abs(direct)));
        // homotopy stability: doubling the detour radius changes nothing
        cdouble loop2 = cycle_period(bd_int, pochhammer_loop(bd_int, gap, 0, 0.4), 1e-11);
        CHECK(std::abs(loop - loop2) < 1e-9 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("the deck map multiplies dz/w periods by omega^2") {
    GapIntegrals g = gap_integrals(bd_int, 1e-12, false);
    SplitMix64 rng(113);
    for (int t = 0; t < 10; ++t) {
        CycleCombo c;
        c.add_term(1 + (int)rng.below(5), (int)rng.below(3), 1 + (int)rng.below(3));
        c.add_term(1 + (int)rng.below(5), (int)rng.below(3), -(long)(1 + rng.below(2)));
        cdouble base = c.period(g, 0);
        cdouble shifted = c.rho().period(g, 0);
        CHECK(std::abs(shifted - omega_pow(2) * base) < 1e-10 * std::max(1.0, std::abs(base)));
    }
}

TEST_CASE("intersection rules: antisymmetry and the face relation radical") {
    SplitMix64 rng(127);
    auto random_combo = [&] {
        CycleCombo c;
        for (int t = 0; t < 3; ++t)
            c.add_term(1 + (int)rng.below(5), (int)rng.below(3), (long)rng.below(7) - 3);
        return c;
    };
    for (int t = 0; t < 50; ++t) {
        CycleCombo a = random_combo(), b = random_combo();
        CHECK(intersection_number(a, b) == -intersection_number(b, a));
        CHECK(intersection_number(a, a.rho()) == intersection_number(a.rho(), a.rho().rho()));
    }
    // boundary relation E(1,s+2) - E(2,s) + E(4,s+2) - E(5,s) pairs to zero with everything
    for (int s = 0; s < 3; ++s) {
        CycleCombo rel;
        rel.add_term(1, s + 2, 1);
        rel.add_term(2, s, -1);
        rel.add_term(4, s + 2, 1);
        rel.add_term(5, s, -1);
        for (int t = 0; t < 30; ++t) CHECK(intersection_number(rel, random_combo()) == 0);
    }
}

TEST_CASE("cycle table: certification, data file round trip, corruption detection") {
    CycleTable builtin = CycleTable::builtin();
    CHECK_NOTHROW(builtin.validate());
    CycleTable from_file = CycleTable::load_file(std::string(TRICOVER_DATA_DIR) + "/cycle_table.txt");
    CHECK_NOTHROW(from_file.validate());
    for (int i = 0; i < 4; ++i) {
        CHECK(from_file.A[(std::size_t)i] == builtin.A[(std::size_t)i]);
        CHECK(from_file.B[(std::size_t)i] == builtin.B[(std::size_t)i]);
    }
    // breaking one sheet index must be caught by the exact Gram/deck checks
    std::istringstream corrupted(
        "A1 1:1,1\nA2 1:3,1\nA3 1:5,2\nA4 1:1,2 -1:2,0 1:3,1\n"
        "B1 1:1,2\nB2 1:3,0\nB3 1:5,1\nB4 1:1,0 1:1,2 1:2,2 -1:3,0\n");
    CycleTable bad = CycleTable::load(corrupted);
    CHECK_THROWS_AS(bad.validate(), cycle_table_error);
}

TEST_CASE("psi_forward: ball membership, twist residual, translation and scaling laws") {
    CyclePeriods p = psi_forward(bd_int, 1e-11);
    CHECK(p.ball_margin > 0);
    CHECK(p.twist_residual < 1e-10);

    std::array<double, 6> shifted{}, scaled{};
    for (int i = 0; i < 6; ++i) {
        shifted[(std::size_t)i] = bd_int.lambda[(std::size_t)i] + 2.75;
        scaled[(std::size_t)i] = bd_int.lambda[(std::size_t)i] * 3.0;
    }
    CyclePeriods pt = psi_forward(BranchData::from(shifted), 1e-11);
    CyclePeriods ps = psi_forward(BranchData::from(scaled), 1e-11);
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(pt.xA[(std::size_t)i] - p.xA[(std::size_t)i]) < 1e-9);
        CHECK(std::abs(ps.xA[(std::size_t)i] - p.xA[(std::size_t)i] / 3.0) < 1e-9);
    }
    CHECK_THROWS_AS(BranchData::from({0, 2, 1, 3, 4, 5}), input_error);
}

TEST_CASE("full periods: normalized matrix is symmetric, positive, and embeds") {
    FullPeriods fp = full_periods(bd_int, 1e-11);
    CHECK(fp.symmetry_residual < 1e-10);
    CHECK(fp.embed_match_residual < 1e-10);
    CHECK(is_positive_definite(fp.omega.imag_part(), 1e-12).positive);
    SplitMix64 rng(131);
    for (int t = 0; t < 3; ++t) {
        std::array<double, 6> l{};
        double cur = rng.uniform(-3, 0);
        for (int i = 0; i < 6; ++i) {
            cur += rng.uniform(0.4, 2.0);
            l[(std::size_t)i] = cur;
        }
        FullPeriods f2 = full_periods(BranchData::from(l), 1e-11);
        CHECK(f2.symmetry_residual < 1e-9);
        CHECK(f2.embed_match_residual < 1e-8);
    }
}
