// Acceptance runner: executes the eight acceptance criteria at their stated
// tolerances and sample counts, printing one PASS/FAIL line per criterion.
// Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>

#include "tricover/suites.hpp"

using namespace tricover;

namespace {

int failures = 0;

template <class F>
void criterion(int number, const std::string& text, F&& run) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        SuiteResult r = run();
        pass = r.pass;
        if (!pass) note = r.details.to_string();
    } catch (const std::exception& e) {
        pass = false;
        note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", number, text.c_str(), secs);
    if (!pass) {
        std::printf("      %s\n", note.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

} // namespace

int main() {
    const std::uint64_t seed = 20240601;

    criterion(1, "exact group suite: braids, squares, unitarity, congruence, lifts, rank-2 formula",
              [] { return suite_group(); });

    criterion(2, "characteristic suite: 81 invariants, 30/30/20(+1) classes, exact rational action",
              [] { return suite_characteristics(); });

    criterion(3, "vanishing suite: 66 vanishing < 1e-9 and 15 surviving > 1e-4 at 50 ball points",
              [seed] { return suite_vanishing(50, seed, 1e-12); });

    criterion(4, "relation suite: linear and cubic theta-cube identities < 1e-8 at 100 ball points",
              [seed] { return suite_relations(100, seed + 1, 1e-12); });

    criterion(5, "invariance suite: 50 level-(1-w) words < 1e-7, chi-free ratios < 1e-8, mirrors < 1e-9",
              [seed] { return suite_invariance(50, seed + 2, 1e-12); });

    criterion(6, "quadrature oracle: (b-a)^(1/3) B(2/3,2/3) to 1e-10 on 10 random intervals",
              [seed] { return suite_quadrature(10, seed + 3); });

    criterion(7, "forward-map certificate: twist < 1e-7, ball membership, period matrix vs embedding < 1e-6",
              [seed] { return suite_forward(20, seed + 4, 1e-10); });

    criterion(8, "main roundtrip: Theta(psi(lambda)) = iota(lambda) < 1e-6, ell to 1e-6, 21 configurations",
              [seed] { return suite_roundtrip(20, seed + 5, 1e-10, 1e-12); });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
