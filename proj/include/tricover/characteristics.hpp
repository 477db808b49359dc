#ifndef TRICOVER_CHARACTERISTICS_HPP
#define TRICOVER_CHARACTERISTICS_HPP

// The 81 = 3^4 sixth-integer theta characteristics fixed (mod Z^8) by the
// level-(1-w) congruence group, indexed by combinatorial labels on six
// letters: fifteen pair-partitions (ij;kl;mn), thirty squares (i^2 j)/(i j^2),
// twenty triples (ijk), and the full label (123456).
//
// A characteristic is stored as the printed representative 6a (entries odd,
// possibly negative); b = -aH is derived. The representative matters: cube
// identities are sensitive to integer shifts of a, so values are always
// evaluated at the stored representative, and mod-6 reduction is used only
// for indexing.

#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "tricover/errors.hpp"

namespace tricover {

enum class LabelClass { TriplePairing, Square, Triple, Full };

// A perfect matching of {1..6}: three pairs, each ascending, sorted by first.
struct Matching {
    std::array<std::array<int, 2>, 3> pairs;

    static Matching of(int i, int j, int k, int l, int m, int n) {
        Matching mt{{{std::array<int, 2>{i, j}, {k, l}, {m, n}}}};
        mt.canonicalize();
        return mt;
    }
    void canonicalize() {
        for (auto& p : pairs)
            if (p[0] > p[1]) std::swap(p[0], p[1]);
        if (pairs[0][0] > pairs[1][0]) std::swap(pairs[0], pairs[1]);
        if (pairs[1][0] > pairs[2][0]) std::swap(pairs[1], pairs[2]);
        if (pairs[0][0] > pairs[1][0]) std::swap(pairs[0], pairs[1]);
    }
    bool contains_pair(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (const auto& p : pairs)
            if (p[0] == i && p[1] == j) return true;
        return false;
    }
    friend bool operator==(const Matching& a, const Matching& b) { return a.pairs == b.pairs; }
    friend bool operator<(const Matching& a, const Matching& b) { return a.pairs < b.pairs; }
    std::string text() const {
        std::string s = "(";
        for (int t = 0; t < 3; ++t) {
            s += std::to_string(pairs[t][0]);
            s += std::to_string(pairs[t][1]);
            if (t < 2) s += ";";
        }
        return s + ")";
    }
};

struct CharLabel {
    LabelClass cls;
    Matching matching{};            // TriplePairing
    int sq_i = 0, sq_j = 0;         // Square: (i^2 j), i != j
    std::array<int, 3> triple{};    // Triple: ascending
    std::string text() const {
        switch (cls) {
            case LabelClass::TriplePairing: return matching.text();
            case LabelClass::Square: // squared letter printed with ^2, letters ascending
                return sq_i < sq_j ? "(" + std::to_string(sq_i) + "^2" + std::to_string(sq_j) + ")"
                                   : "(" + std::to_string(sq_j) + std::to_string(sq_i) + "^2)";
            case LabelClass::Triple:
                return "(" + std::to_string(triple[0]) + std::to_string(triple[1]) +
                       std::to_string(triple[2]) + ")";
            case LabelClass::Full: return "(123456)";
        }
        return "";
    }
};

// 6a with odd entries; the characteristic is (a, -aH), a = six_a / 6.
struct SixthChar {
    std::array<int, 4> six_a;

    std::array<int, 4> six_b() const { // 6b = -(6a)H
        return {-six_a[0], -six_a[1], -six_a[2], six_a[3]};
    }
    SixthChar negated() const { return {{-six_a[0], -six_a[1], -six_a[2], -six_a[3]}}; }
    std::array<int, 4> mod6() const { // reduce into {1,3,5}
        std::array<int, 4> r{};
        for (int i = 0; i < 4; ++i) r[i] = ((six_a[i] % 6) + 6) % 6;
        return r;
    }
    friend bool operator==(const SixthChar& a, const SixthChar& b) { return a.six_a == b.six_a; }
};

// (6a) H t(6a) mod 24, in {0,...,23}
inline int class_residue(const SixthChar& c) {
    long q = 0;
    for (int i = 0; i < 4; ++i) q += (i < 3 ? 1 : -1) * static_cast<long>(c.six_a[i]) * c.six_a[i];
    return static_cast<int>(((q % 24) + 24) % 24);
}

inline LabelClass classify(const SixthChar& c) {
    for (int v : c.six_a)
        if (((v % 2) + 2) % 2 != 1) throw input_error("classify: entries must be odd");
    auto m6 = c.mod6();
    if (m6 == std::array<int, 4>{3, 3, 3, 3}) return LabelClass::Full;
    switch (class_residue(c)) {
        case 2: return LabelClass::TriplePairing;
        case 10: return LabelClass::Square;
        case 18: return LabelClass::Triple;
        default: throw consistency_error("classify: residue outside {2,10,18}");
    }
}

namespace detail {

struct PairingRow { int i, j, k, l, m, n; std::array<int, 4> a; };

// the fifteen pair-partition characteristics, printed representatives
inline const std::array<PairingRow, 15>& pairing_table() {
    static const std::array<PairingRow, 15> t = {{
        {1, 2, 3, 4, 5, 6, {3, 3, 3, -1}},
        {1, 2, 3, 5, 4, 6, {3, 1, 1, -3}},
        {1, 2, 3, 6, 4, 5, {3, 1, -1, -3}},
        {1, 3, 2, 4, 5, 6, {1, 1, 3, -3}},
        {1, 3, 2, 5, 4, 6, {1, -1, 1, -1}},
        {1, 3, 2, 6, 4, 5, {-1, 1, 1, 1}},
        {1, 4, 2, 3, 5, 6, {1, -1, 3, -3}},
        {1, 4, 2, 5, 3, 6, {1, 1, 1, -1}},
        {1, 4, 2, 6, 3, 5, {1, 1, -1, -1}},
        {1, 5, 2, 3, 4, 6, {1, 1, -1, 1}},
        {1, 5, 2, 4, 3, 6, {1, -1, -1, 1}},
        {1, 5, 2, 6, 3, 4, {1, 3, 1, -3}},
        {1, 6, 2, 3, 4, 5, {1, 1, 1, 1}},
        {1, 6, 2, 4, 3, 5, {1, -1, 1, 1}},
        {1, 6, 2, 5, 3, 4, {1, 3, -1, -3}},
    }};
    return t;
}

struct SquareRow { int i, j; std::array<int, 4> a; };

// (i^2 j) for i < j; (i j^2) carries -a
inline const std::array<SquareRow, 15>& square_table() {
    static const std::array<SquareRow, 15> t = {{
        {1, 2, {1, 3, 3, 3}},
        {1, 3, {5, 1, 3, 5}},
        {1, 4, {5, 5, 3, 5}},
        {1, 5, {5, 3, 1, 1}},
        {1, 6, {5, 3, 5, 1}},
        {2, 3, {1, 1, 3, 5}},
        {2, 4, {1, 5, 3, 5}},
        {2, 5, {1, 3, 1, 1}},
        {2, 6, {1, 3, 5, 1}},
        {3, 4, {3, 1, 3, 3}},
        {3, 5, {3, 5, 1, 5}},
        {3, 6, {3, 5, 5, 5}},
        {4, 5, {3, 1, 1, 5}},
        {4, 6, {3, 1, 5, 5}},
        {5, 6, {3, 3, 1, 3}},
    }};
    return t;
}

struct TripleRow { int i, j, k; std::array<int, 4> a; };

// triples containing the letter 1; the complement (lmn) carries -a
inline const std::array<TripleRow, 10>& triple_table() {
    static const std::array<TripleRow, 10> t = {{
        {1, 2, 3, {3, 1, 3, 5}},
        {1, 2, 4, {3, 5, 3, 5}},
        {1, 2, 5, {3, 3, 1, 1}},
        {1, 2, 6, {3, 3, 5, 1}},
        {1, 3, 4, {1, 3, 3, 1}},
        {1, 3, 5, {1, 1, 1, 3}},
        {1, 3, 6, {1, 1, 5, 3}},
        {1, 4, 5, {1, 5, 1, 3}},
        {1, 4, 6, {1, 5, 5, 3}},
        {1, 5, 6, {1, 3, 3, 5}},
    }};
    return t;
}

} // namespace detail

// The fifteen pair-partition labels in canonical (lexicographic) order; this
// ordering indexes theta cube vectors and P^14 coordinates throughout.
inline const std::vector<Matching>& canonical_matchings() {
    static const std::vector<Matching> ms = [] {
        std::vector<Matching> v;
        for (const auto& r : detail::pairing_table()) v.push_back(Matching::of(r.i, r.j, r.k, r.l, r.m, r.n));
        return v;
    }();
    return ms;
}

inline int matching_index(const Matching& m) {
    const auto& ms = canonical_matchings();
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (ms[i] == m) return static_cast<int>(i);
    throw input_error("matching_index: not a perfect matching of {1..6}");
}

inline SixthChar characteristic_for_label(const CharLabel& lab) {
    switch (lab.cls) {
        case LabelClass::TriplePairing: {
            for (const auto& r : detail::pairing_table())
                if (Matching::of(r.i, r.j, r.k, r.l, r.m, r.n) == lab.matching) return {r.a};
            throw input_error("characteristic_for_label: bad matching");
        }
        case LabelClass::Square: {
            int i = lab.sq_i, j = lab.sq_j;
            bool flipped = i > j;
            if (flipped) std::swap(i, j);
            for (const auto& r : detail::square_table())
                if (r.i == i && r.j == j) {
                    SixthChar c{r.a};
                    return flipped ? c.negated() : c; // (i j^2) = (j^2 i) with i<j -> -a of (i^2 j)... see below
                }
            throw input_error("characteristic_for_label: bad square label");
        }
        case LabelClass::Triple: {
            auto t = lab.triple;
            if (!(t[0] < t[1] && t[1] < t[2]) || t[0] < 1 || t[2] > 6)
                throw input_error("characteristic_for_label: bad triple label");
            for (const auto& r : detail::triple_table())
                if (r.i == t[0] && r.j == t[1] && r.k == t[2]) return {r.a};
            // complement of a printed triple (all printed ones contain 1)
            std::array<bool, 7> in{};
            for (int v : t) in[static_cast<std::size_t>(v)] = true;
            std::array<int, 3> comp{};
            int c = 0;
            for (int v = 1; v <= 6; ++v)
                if (!in[static_cast<std::size_t>(v)]) comp[static_cast<std::size_t>(c++)] = v;
            for (const auto& r : detail::triple_table())
                if (r.i == comp[0] && r.j == comp[1] && r.k == comp[2]) return SixthChar{r.a}.negated();
            throw input_error("characteristic_for_label: bad triple label");
        }
        case LabelClass::Full: return {{3, 3, 3, 3}};
    }
    throw input_error("characteristic_for_label: bad label");
}

// Convenience: pair-partition characteristic by matching.
inline SixthChar characteristic_for_matching(const Matching& m) {
    CharLabel lab;
    lab.cls = LabelClass::TriplePairing;
    lab.matching = m;
    return characteristic_for_label(lab);
}

// All 66 labels: 15 pairings, 30 squares, 20 triples, 1 full.
inline std::vector<CharLabel> all_labels() {
    std::vector<CharLabel> out;
    for (const auto& m : canonical_matchings()) {
        CharLabel l;
        l.cls = LabelClass::TriplePairing;
        l.matching = m;
        out.push_back(l);
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) {
                CharLabel l;
                l.cls = LabelClass::Square;
                l.sq_i = i;
                l.sq_j = j;
                out.push_back(l);
            }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k) {
                CharLabel l;
                l.cls = LabelClass::Triple;
                l.triple = {i, j, k};
                out.push_back(l);
            }
    CharLabel full;
    full.cls = LabelClass::Full;
    out.push_back(full);
    return out;
}

// All 81 characteristics as mod-6 canonical representatives {1,3,5}^4.
inline std::vector<SixthChar> all_characteristics_mod6() {
    std::vector<SixthChar> out;
    static const int vals[3] = {1, 3, 5};
    for (int a0 : vals)
        for (int a1 : vals)
            for (int a2 : vals)
                for (int a3 : vals) out.push_back({{a0, a1, a2, a3}});
    return out;
}

} // namespace tricover

#endif
