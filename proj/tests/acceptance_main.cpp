// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ccm/extractor.hpp"
#include "ccm/extremal.hpp"
#include "ccm/kernels.hpp"
#include "ccm/oracles.hpp"
#include "ccm/rng.hpp"
#include "ccm/selftest.hpp"
#include "ccm/stress.hpp"
#include "oracle_helpers.hpp"

using namespace ccm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& id, bool pass, const std::string& detail, double secs) {
    if (!pass) ++failures;
    std::printf("%s %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
}

void criterion_selftest(const std::string& id, SelftestResult (*fn)(long long), long long arg,
                        double time_limit) {
    auto t0 = Clock::now();
    SelftestResult r = fn(arg);
    double secs = seconds_since(t0);
    bool pass = r.pass && secs < time_limit;
    std::string detail = r.detail;
    if (secs >= time_limit) detail += "; exceeded " + std::to_string(time_limit) + "s limit";
    report(id, pass, detail, secs);
}

double percentile(std::vector<double> xs, double q) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    size_t i = static_cast<size_t>(std::ceil(q * xs.size()));
    return xs[std::min(xs.size() - 1, i == 0 ? 0 : i - 1)];
}

void criterion_stress(const std::string& id, int n, int trials, std::vector<double> densities,
                      uint64_t seed) {
    auto t0 = Clock::now();
    StressConfig cfg;
    cfg.n = n;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.red_densities = std::move(densities);
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    StressSummary s = run_stress(cfg);
    std::vector<double> times;
    for (const TrialRecord& rec : s.trials) times.push_back(rec.seconds);
    double median = percentile(times, 0.5), p99 = percentile(times, 0.99);
    bool pass = s.all_ok() && s.unresolved == 0 &&
                s.verified == static_cast<int>(s.trials.size()) && median < 2.0 && p99 < 30.0;
    std::ostringstream detail;
    detail << "n=" << n << ": " << s.verified << "/" << s.trials.size()
           << " verified, median=" << median << "s p99=" << p99 << "s";
    if (!s.all_ok()) detail << "; " << s.failed << " FAILED";
    report(id, pass, detail.str(), seconds_since(t0));
}

}  // namespace

int main() {
    // C1: Lemma 2 exhaustive oracle (< 60 s)
    criterion_selftest("C1 lemma-2-exhaustive", selftest_lemma2, 100000, 60.0);

    // C2: matching-guarantee verification on 10^4 random colorings (< 5 min)
    criterion_selftest("C2 f-lemma-instances", selftest_f_lemma, 10000, 300.0);

    // C3: R(2K2,2K4) = 9, witness and exhaustive upper check (< 30 s)
    {
        auto t0 = Clock::now();
        SelftestResult r = selftest_ramsey_small();
        double secs = seconds_since(t0);
        report("C3 ramsey-2K2-2K4", r.pass && secs < 30.0, r.detail, secs);
    }

    // C4: main-theorem stress at n=3 and n=4
    criterion_stress("C4a stress-n3", 3, 2000, {0.1, 0.3, 0.5, 0.7, 0.9}, 2026);
    criterion_stress("C4b stress-n4", 4, 500, {0.3, 0.5, 0.7}, 2027);

    // C5: lower-bound machine check for n in 2..5 (< 5 min total)
    {
        auto t0 = Clock::now();
        bool pass = true;
        std::ostringstream detail;
        for (int n : {2, 3, 4, 5}) {
            try {
                AbsenceReport rep = check_absence(build_extremal(n), n);
                detail << "n=" << n << (rep.absent ? " absent" : " PRESENT(!)") << " ";
                pass = pass && rep.absent;
            } catch (const std::exception& e) {
                detail << "n=" << n << " error: " << e.what() << " ";
                pass = false;
            }
        }
        double secs = seconds_since(t0);
        if (secs >= 300.0) pass = false;
        report("C5 extremal-absence", pass, detail.str(), secs);
    }

    // C6: greedy packing count on 500 random K36
    {
        auto t0 = Clock::now();
        int ok = 0;
        const int want = 3 * 3 - 4 + (3 - 1) / 4;  // 5 at n=3
        for (uint64_t trial = 0; trial < 500; ++trial) {
            EdgeColoring c = random_coloring(36, 0.5, derive_seed(0x6EED, trial));
            if (static_cast<int>(greedy_mono_k4_packing(c).size()) >= want) ++ok;
        }
        std::ostringstream detail;
        detail << ok << "/500 colorings yielded >= " << want << " disjoint quads";
        report("C6 greedy-packing", ok == 500, detail.str(), seconds_since(t0));
    }

    // C7: formula spot checks, exact equality
    {
        auto t0 = Clock::now();
        bool pass = guaranteed_red_matching(2, 3) == 0 && guaranteed_red_matching(1, 4) == 1 &&
                    guaranteed_red_matching(3, 10) == 5 && ramsey_match_quads(2, 1) == 9 &&
                    ramsey_triangles_quads(1, 1) == 11;
        int agree = 0;
        for (int m = 1; m <= 100; ++m)
            if (3 * (m - 1) + 2 * m + 2 == 4 * (m - 1) + m + 3) ++agree;
        pass = pass && agree == 100;
        report("C7 formula-spot-checks", pass,
               "f(2,3)=0 f(1,4)=1 f(3,10)=5 R(2K2,2K4)=9 R(1K3,2K4)=11; branch agreement at "
               "k=m-1 for all m<=100",
               seconds_since(t0));
    }

    // C8: kernels vs subset-DP oracles on orders <= 12
    {
        auto t0 = Clock::now();
        long long checked = 0, mismatches = 0;
        for (int order = 4; order <= 12; ++order) {
            for (uint64_t i = 0; i < 120; ++i) {
                double p = 0.15 + 0.1 * (i % 7);
                EdgeColoring c =
                    random_coloring(order, p, derive_seed(0xC8 + order, i));
                Color color = i % 2 ? Color::Red : Color::Blue;
                VertexSet all = c.all_vertices();
                if (max_matching(c, color, all).size() !=
                    ccm_test::oracle_max_matching(c, color, all))
                    ++mismatches;
                if (max_k4_packing(c, color, all).size() !=
                    ccm_test::oracle_max_k4_packing(c, color, all))
                    ++mismatches;
                int tri = ccm_test::oracle_max_triangle_packing(c, color, all);
                if (!find_triangle_matching(c, color, all, tri).has_value()) ++mismatches;
                if (find_triangle_matching(c, color, all, tri + 1).has_value()) ++mismatches;
                ++checked;
            }
        }
        std::ostringstream detail;
        detail << checked << " colorings x 3 kernels vs oracles, " << mismatches
               << " mismatches";
        report("C8 kernel-vs-oracle", mismatches == 0 && checked >= 1000, detail.str(),
               seconds_since(t0));
    }

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
