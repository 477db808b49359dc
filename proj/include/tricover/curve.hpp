#ifndef TRICOVER_CURVE_HPP
#define TRICOVER_CURVE_HPP

// Forward period map for w^3 = prod_{i=1}^{6} (z - lambda_i) with real ordered
// branch points.
//
// Sheets. w0 is the branch of the cube root with w0 > 0 on (lambda_6, +inf),
// obtained by cutting the plane along vertical rays above each branch point;
// sheet s carries w = omega^s w0. Crossing the ray above lambda_i with
// decreasing real part raises s by one, with increasing real part lowers it.
//
// Elementary cycles. E(k,s) runs along the open gap (lambda_k, lambda_{k+1})
// on sheet s and back on sheet s+1; the branch points close it up. These
// fifteen cycles generate the first homology (rank 8; one three-term relation
// per gap, two global face relations), intersect by the local rules
//   E(k,s).E(k,s+1) = 1,   E(k,s).E(k+1,s) = -1,   E(k,s).E(k+1,s+2) = +1,
// and are permuted by the deck map rho: E(k,s) -> E(k,s+1).
//
// The cycle table expresses a symplectic basis (A_1..A_4, B_1..B_4) with
// B_i.A_j = delta_ij and rho(B_i) = A_i (i<=3), rho(B_4) = -A_4 as integer
// combinations of the E(k,s); it ships in data/cycle_table.txt and is
// certified at run time by the exact Gram/rho checks plus the Riemann
// positivity of the assembled period matrix.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tricover/ball.hpp"
#include "tricover/eisenstein.hpp"
#include "tricover/errors.hpp"
#include "tricover/forms.hpp"
#include "tricover/quadrature.hpp"

namespace tricover {

struct BranchData {
    std::array<double, 6> lambda;

    static BranchData from(const std::array<double, 6>& l) {
        for (int i = 0; i + 1 < 6; ++i)
            if (!(l[static_cast<std::size_t>(i)] < l[static_cast<std::size_t>(i + 1)]))
                throw input_error("BranchData: branch points must be strictly increasing");
        return BranchData{l};
    }
    double min_gap() const {
        double g = lambda[1] - lambda[0];
        for (int i = 1; i + 1 < 6; ++i)
            g = std::min(g, lambda[static_cast<std::size_t>(i + 1)] - lambda[static_cast<std::size_t>(i)]);
        return g;
    }
};

// branch of the cube root of prod(z - lambda_i), cuts vertically upward
inline cdouble w_zero(const BranchData& bd, cdouble z) {
    double mod = 1.0;
    double phase = 0.0;
    for (double l : bd.lambda) {
        cdouble zeta = z - l;
        double r = std::abs(zeta);
        if (r == 0.0) throw degeneracy_error("w_zero: branch point");
        double th = std::atan2(zeta.imag(), zeta.real()); // (-pi, pi]
        if (th > 0.5 * kPi) th -= 2 * kPi;                // range (-3pi/2, pi/2]
        mod *= std::cbrt(r);
        phase += th / 3.0;
    }
    return {mod * std::cos(phase), mod * std::sin(phase)};
}

// Same branch, with the differences z - lambda_i supplied externally for the
// branch points sitting at the segment endpoints; keeps the integrable
// endpoint singularities fully resolved at tanh-sinh node depths where z
// itself rounds onto the endpoint.
inline cdouble w_zero_factored(const BranchData& bd, cdouble z, cdouble a_end, cdouble za,
                               cdouble b_end, cdouble zb) {
    double mod = 1.0;
    double phase = 0.0;
    for (double l : bd.lambda) {
        cdouble zeta;
        if (std::abs(a_end - l) <= 1e-13 * (1.0 + std::abs(l)))
            zeta = za;
        else if (std::abs(b_end - l) <= 1e-13 * (1.0 + std::abs(l)))
            zeta = zb;
        else
            zeta = z - l;
        double r = std::abs(zeta);
        if (r == 0.0) throw degeneracy_error("w_zero: branch point");
        double th = std::atan2(zeta.imag(), zeta.real());
        if (th > 0.5 * kPi) th -= 2 * kPi;
        mod *= std::cbrt(r);
        phase += th / 3.0;
    }
    return {mod * std::cos(phase), mod * std::sin(phase)};
}

inline const cdouble kOmegaPow[3] = {cdouble(1.0, 0.0), kOmega, cdouble(-0.5, -0.8660254037844386467637231707529362)};

inline cdouble omega_pow(int s) { return kOmegaPow[((s % 3) + 3) % 3]; }

inline cdouble w_on_sheet(const BranchData& bd, cdouble z, int sheet) {
    return omega_pow(sheet) * w_zero(bd, z);
}

// ---- sheet-tracked paths ---------------------------------------------------

struct PathSegment {
    cdouble a, b; // straight segment
    int sheet;    // sheet at the start point
};

struct SheetPath {
    std::vector<PathSegment> segments;
    bool closed = true;
};

namespace detail_curve {

struct Crossing {
    double t;  // parameter in (0,1)
    int delta; // sheet change when passing the crossing
};

inline std::vector<Crossing> ray_crossings(const BranchData& bd, cdouble a, cdouble b) {
    std::vector<Crossing> cs;
    double xa = a.real(), xb = b.real();
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    for (double l : bd.lambda) {
        // an endpoint sitting on a cut makes the crossing count ambiguous
        if ((std::abs(xa - l) <= 1e-13 * scale && a.imag() > 0) ||
            (std::abs(xb - l) <= 1e-13 * scale && b.imag() > 0))
            throw input_error("path segment endpoint lies on a branch cut");
        if (xa == xb) continue;
        if ((xa < l && xb > l) || (xa > l && xb < l)) {
            double t = (l - xa) / (xb - xa);
            double y = a.imag() + t * (b.imag() - a.imag());
            if (y > 0) cs.push_back({t, xb < xa ? +1 : -1});
            else if (y == 0) throw degeneracy_error("path passes through a branch point");
        }
    }
    std::sort(cs.begin(), cs.end(), [](const Crossing& u, const Crossing& v) { return u.t < v.t; });
    return cs;
}

inline bool is_branch_point(const BranchData& bd, cdouble z, double scale) {
    for (double l : bd.lambda)
        if (std::abs(z - l) <= 1e-9 * scale) return true;
    return false;
}

} // namespace detail_curve

// sheet at the end of a segment that starts on segment.sheet
inline int sheet_after_segment(const BranchData& bd, const PathSegment& seg) {
    int s = seg.sheet;
    for (const auto& c : detail_curve::ray_crossings(bd, seg.a, seg.b)) s += c.delta;
    return s;
}

// integral of z^zpow dz / w^wpow along one segment with sheet tracking
inline cdouble segment_period(const BranchData& bd, const PathSegment& seg, int zpow, int wpow,
                              double tol) {
    auto crossings = detail_curve::ray_crossings(bd, seg.a, seg.b);
    cdouble total = 0.0;
    double t0 = 0.0;
    int sheet = seg.sheet;
    auto piece = [&](double ta, double tb, int s) {
        cdouble pa = seg.a + ta * (seg.b - seg.a);
        cdouble pb = seg.a + tb * (seg.b - seg.a);
        cdouble deck = omega_pow(s * wpow); // w^wpow on sheet s = omega^(s wpow) w0^wpow
        auto f = [&](cdouble z, cdouble za, cdouble zb) {
            cdouble w0 = w_zero_factored(bd, z, pa, za, pb, zb);
            cdouble den = wpow == 1 ? w0 : w0 * w0;
            cdouble num = 1.0;
            for (int p = 0; p < zpow; ++p) num *= z;
            return num / den;
        };
        QuadratureResult q = integrate_segment_singular(f, pa, pb, tol);
        return q.value / deck;
    };
    for (const auto& c : crossings) {
        total += piece(t0, c.t, sheet);
        sheet += c.delta;
        t0 = c.t;
    }
    total += piece(t0, 1.0, sheet);
    return total;
}

// closed-path integral of dz/w; validates endpoint/sheet continuity
inline cdouble cycle_period(const BranchData& bd, const SheetPath& path, double tol) {
    if (path.segments.empty()) throw input_error("cycle_period: empty path");
    double scale = std::max(1.0, std::abs(bd.lambda[5] - bd.lambda[0]));
    const auto& segs = path.segments;
    for (std::size_t k = 0; k < segs.size(); ++k) {
        const auto& cur = segs[k];
        const auto& nxt = segs[(k + 1) % segs.size()];
        bool last = k + 1 == segs.size();
        if (last && !path.closed) break;
        if (std::abs(cur.b - nxt.a) > 1e-9 * scale)
            throw input_error("cycle_period: segments do not share endpoints");
        int end_sheet = sheet_after_segment(bd, cur);
        bool at_branch = detail_curve::is_branch_point(bd, cur.b, scale);
        if (!at_branch && ((end_sheet % 3) + 3) % 3 != ((nxt.sheet % 3) + 3) % 3)
            throw input_error("cycle_period: sheet mismatch away from branch points (path not closed)");
    }
    cdouble total = 0.0;
    for (const auto& s : segs) total += segment_period(bd, s, 0, 1, tol);
    return total;
}

// ---- gap integrals and elementary periods ----------------------------------

// forms: phi_1 = dz/w, phi_2 = dz/w^2, phi_3 = z dz/w^2, phi_4 = z^2 dz/w^2
inline constexpr int kFormZPow[4] = {0, 0, 1, 2};
inline constexpr int kFormWPow[4] = {1, 2, 2, 2};

struct GapIntegrals {
    // I[k][j] = integral over gap k+1 of z^m dz / w0^p for form j
    std::array<std::array<cdouble, 4>, 5> I{};
};

inline GapIntegrals gap_integrals(const BranchData& bd, double tol, bool all_forms) {
    GapIntegrals g;
    for (int k = 0; k < 5; ++k) {
        cdouble a = bd.lambda[static_cast<std::size_t>(k)];
        cdouble b = bd.lambda[static_cast<std::size_t>(k + 1)];
        for (int j = 0; j < (all_forms ? 4 : 1); ++j) {
            int zp = kFormZPow[j], wp = kFormWPow[j];
            auto f = [&](cdouble z, cdouble za, cdouble zb) {
                cdouble w0 = w_zero_factored(bd, z, a, za, b, zb);
                cdouble den = wp == 1 ? w0 : w0 * w0;
                cdouble num = 1.0;
                for (int p = 0; p < zp; ++p) num *= z;
                return num / den;
            };
            g.I[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                integrate_segment_singular(f, a, b, tol).value;
        }
    }
    return g;
}

// integral of form j over E(k,s): (omega^{-p s} - omega^{-p(s+1)}) I_k
inline cdouble elementary_period(const GapIntegrals& g, int gap, int sheet, int form) {
    int p = kFormWPow[form];
    cdouble f = omega_pow(-p * sheet) - omega_pow(-p * (sheet + 1));
    return f * g.I[static_cast<std::size_t>(gap - 1)][static_cast<std::size_t>(form)];
}

// ---- exact cycle algebra -----------------------------------------------------

// integer combination of the E(k,s); stored per gap with the relation
// E(k,0) + E(k,1) + E(k,2) = 0 reduced out (coefficient of E(k,2) set to 0)
struct CycleCombo {
    std::array<std::array<long, 3>, 5> c{}; // c[gap-1][sheet]

    void add_term(int gap, int sheet, long coeff) {
        if (gap < 1 || gap > 5) throw input_error("CycleCombo: gap out of range");
        c[static_cast<std::size_t>(gap - 1)][static_cast<std::size_t>(((sheet % 3) + 3) % 3)] += coeff;
    }
    CycleCombo canonical() const {
        CycleCombo r = *this;
        for (auto& row : r.c) {
            long m = row[2];
            for (auto& v : row) v -= m;
        }
        return r;
    }
    CycleCombo rho() const { // deck map: E(k,s) -> E(k,s+1)
        CycleCombo r;
        for (int k = 0; k < 5; ++k)
            for (int s = 0; s < 3; ++s) r.c[static_cast<std::size_t>(k)][static_cast<std::size_t>((s + 1) % 3)] = c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
        return r;
    }
    friend CycleCombo operator+(const CycleCombo& a, const CycleCombo& b) {
        CycleCombo r;
        for (int k = 0; k < 5; ++k)
            for (int s = 0; s < 3; ++s) r.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] = a.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] + b.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
        return r;
    }
    friend CycleCombo operator-(const CycleCombo& a) {
        CycleCombo r;
        for (int k = 0; k < 5; ++k)
            for (int s = 0; s < 3; ++s) r.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] = -a.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
        return r;
    }
    friend bool operator==(const CycleCombo& a, const CycleCombo& b) {
        return a.canonical().c == b.canonical().c;
    }

    cdouble period(const GapIntegrals& g, int form) const {
        cdouble t = 0.0;
        for (int k = 0; k < 5; ++k)
            for (int s = 0; s < 3; ++s)
                if (long v = c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)]; v != 0)
                    t += static_cast<double>(v) * elementary_period(g, k + 1, s, form);
        return t;
    }

    // one closed two-segment loop per unit of each coefficient
    std::vector<SheetPath> term_paths(const BranchData& bd) const {
        std::vector<SheetPath> out;
        for (int k = 0; k < 5; ++k)
            for (int s = 0; s < 3; ++s) {
                long v = c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
                cdouble a = bd.lambda[static_cast<std::size_t>(k)], b = bd.lambda[static_cast<std::size_t>(k + 1)];
                for (long rep = 0; rep < std::labs(v); ++rep) {
                    SheetPath p;
                    if (v > 0) { // gap crossing on sheet s, return on sheet s+1
                        p.segments.push_back({a, b, s});
                        p.segments.push_back({b, a, (s + 1) % 3});
                    } else { // reversed loop
                        p.segments.push_back({a, b, (s + 1) % 3});
                        p.segments.push_back({b, a, s});
                    }
                    out.push_back(std::move(p));
                }
            }
        return out;
    }
};

// intersection pairing from the local rules in the header comment
inline long intersection_number(const CycleCombo& a, const CycleCombo& b) {
    auto same_gap = [](int ds) { // <E(k,s), E(k,s+ds)>
        switch (((ds % 3) + 3) % 3) {
            case 1: return 1;
            case 2: return -1;
            default: return 0;
        }
    };
    auto adjacent = [](int ds) { // <E(k,s), E(k+1,s+ds)>
        switch (((ds % 3) + 3) % 3) {
            case 0: return -1;
            case 2: return 1;
            default: return 0;
        }
    };
    long total = 0;
    for (int k = 0; k < 5; ++k)
        for (int s = 0; s < 3; ++s) {
            long ca = a.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
            if (ca == 0) continue;
            for (int t = 0; t < 3; ++t) {
                long cb = b.c[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)];
                if (cb != 0) total += ca * cb * same_gap(t - s);
                if (k + 1 < 5) {
                    long cb2 = b.c[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(t)];
                    if (cb2 != 0) total += ca * cb2 * adjacent(t - s);
                }
                if (k - 1 >= 0) {
                    long cb0 = b.c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(t)];
                    if (cb0 != 0) total -= ca * cb0 * adjacent(s - t);
                }
            }
        }
    return total;
}

// ---- cycle table -------------------------------------------------------------

struct CycleTable {
    std::array<CycleCombo, 4> A, B;

    // mirrors data/cycle_table.txt
    static CycleTable builtin() {
        CycleTable t;
        t.A[0].add_term(1, 0, 1);
        t.A[1].add_term(3, 1, 1);
        t.A[2].add_term(5, 2, 1);
        t.A[3].add_term(1, 2, 1);
        t.A[3].add_term(2, 0, -1);
        t.A[3].add_term(3, 1, 1);
        t.B[0].add_term(1, 2, 1);
        t.B[1].add_term(3, 0, 1);
        t.B[2].add_term(5, 1, 1);
        t.B[3].add_term(1, 0, 1);
        t.B[3].add_term(1, 2, 1);
        t.B[3].add_term(2, 2, 1);
        t.B[3].add_term(3, 0, -1);
        return t;
    }

    static CycleTable load(std::istream& in) {
        CycleTable t;
        std::array<bool, 8> seen{};
        std::string line;
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string name;
            if (!(ls >> name)) continue;
            if (name.size() != 2 || (name[0] != 'A' && name[0] != 'B') || name[1] < '1' || name[1] > '4')
                throw input_error("cycle table: bad cycle name '" + name + "'");
            int idx = name[1] - '1';
            CycleCombo& combo = name[0] == 'A' ? t.A[static_cast<std::size_t>(idx)] : t.B[static_cast<std::size_t>(idx)];
            seen[static_cast<std::size_t>((name[0] == 'A' ? 0 : 4) + idx)] = true;
            std::string term;
            while (ls >> term) {
                long coeff;
                int gap, sheet;
                if (std::sscanf(term.c_str(), "%ld:%d,%d", &coeff, &gap, &sheet) != 3)
                    throw input_error("cycle table: bad term '" + term + "'");
                combo.add_term(gap, sheet, coeff);
            }
        }
        for (bool s : seen)
            if (!s) throw input_error("cycle table: missing cycle definitions");
        return t;
    }

    static CycleTable load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw input_error("cycle table: cannot open " + path);
        return load(in);
    }

    // exact certification: deck structure and symplectic Gram
    void validate() const {
        for (int i = 0; i < 3; ++i)
            if (!(B[static_cast<std::size_t>(i)].rho() == A[static_cast<std::size_t>(i)]))
                throw cycle_table_error("cycle table: rho(B_i) != A_i at i=" + std::to_string(i + 1));
        if (!(B[3].rho() == -A[3]))
            throw cycle_table_error("cycle table: rho(B_4) != -A_4");
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                long aa = intersection_number(A[static_cast<std::size_t>(i)], A[static_cast<std::size_t>(j)]);
                long bb = intersection_number(B[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(j)]);
                long ba = intersection_number(B[static_cast<std::size_t>(i)], A[static_cast<std::size_t>(j)]);
                if (aa != 0 || bb != 0 || ba != (i == j ? 1 : 0))
                    throw cycle_table_error("cycle table: Gram matrix is not symplectic");
            }
    }
};

// ---- forward period map -------------------------------------------------------

struct CyclePeriods {
    Vec4 xA{}, xB{};
    double twist_residual = 0.0; // max |xA_i - w^2 xB_i| (i<=3), |xA_4 + w^2 xB_4|
    double ball_margin = 0.0;
};

inline CyclePeriods psi_forward(const BranchData& bd, double tol = 1e-10,
                                const CycleTable& table = CycleTable::builtin()) {
    table.validate();
    GapIntegrals g = gap_integrals(bd, tol, false);
    CyclePeriods out;
    cdouble om2 = omega_pow(2);
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        out.xA[static_cast<std::size_t>(i)] = table.A[static_cast<std::size_t>(i)].period(g, 0);
        out.xB[static_cast<std::size_t>(i)] = table.B[static_cast<std::size_t>(i)].period(g, 0);
        scale = std::max(scale, std::abs(out.xA[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < 4; ++i) {
        cdouble expect = (i < 3 ? 1.0 : -1.0) * om2 * out.xB[static_cast<std::size_t>(i)];
        out.twist_residual = std::max(out.twist_residual,
                                      std::abs(out.xA[static_cast<std::size_t>(i)] - expect) / scale);
    }
    if (out.twist_residual > 10 * std::max(tol, 1e-14))
        throw cycle_table_error("psi_forward: rho-twist residual too large (sheet bookkeeping)");
    BallCheck bc = inside_ball(out.xA);
    if (!bc.inside) throw cycle_table_error("psi_forward: A-periods not inside the ball");
    out.ball_margin = bc.margin;
    return out;
}

struct FullPeriods {
    CMat omega_A{4, 4}, omega_B{4, 4}; // rows: cycles, cols: forms
    CMat omega{4, 4};                  // omega_A * omega_B^{-1}
    double symmetry_residual = 0.0;
    double embed_match_residual = 0.0; // max |omega - j(xA)|
    CyclePeriods periods;
};

inline FullPeriods full_periods(const BranchData& bd, double tol = 1e-10,
                                const CycleTable& table = CycleTable::builtin()) {
    table.validate();
    GapIntegrals g = gap_integrals(bd, tol, true);
    FullPeriods out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            out.omega_A(i, j) = table.A[static_cast<std::size_t>(i)].period(g, j);
            out.omega_B(i, j) = table.B[static_cast<std::size_t>(i)].period(g, j);
        }
    for (int i = 0; i < 4; ++i) {
        out.periods.xA[static_cast<std::size_t>(i)] = out.omega_A(i, 0);
        out.periods.xB[static_cast<std::size_t>(i)] = out.omega_B(i, 0);
    }
    out.omega = out.omega_A * out.omega_B.inverse();
    out.symmetry_residual = symmetry_defect(out.omega) / std::max(1.0, out.omega.max_abs());
    BallPoint x = BallPoint::from(out.periods.xA);
    out.periods.ball_margin = x.margin;
    SiegelPoint j = embed_j(x);
    out.embed_match_residual = (out.omega - j.tau).max_abs();
    cdouble om2 = omega_pow(2);
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) scale = std::max(scale, std::abs(out.periods.xA[static_cast<std::size_t>(i)]));
    for (int i = 0; i < 4; ++i) {
        cdouble expect = (i < 3 ? 1.0 : -1.0) * om2 * out.periods.xB[static_cast<std::size_t>(i)];
        out.periods.twist_residual = std::max(out.periods.twist_residual,
                                              std::abs(out.periods.xA[static_cast<std::size_t>(i)] - expect) / scale);
    }
    return out;
}

} // namespace tricover

#endif
