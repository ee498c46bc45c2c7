#include "ccm/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "ccm/errors.hpp"
#include "ccm/oracles.hpp"
#include "ccm/partition.hpp"
#include "ccm/rng.hpp"

namespace ccm {

namespace {

// The Two kind is legitimate only when a_1,a_2 >= n-2 and the rest sums
// below ceil(n/4); everything else must come out Three.
bool three_preference_ok(const PartitionInput& in, const PartitionGrouping& g) {
    if (g.kind == GroupingKind::Three) return true;
    long long rest = in.sum() - in.parts[0] - (in.parts.size() > 1 ? in.parts[1] : 0);
    return in.parts.size() >= 2 && in.parts[0] >= in.n - 2 && in.parts[1] >= in.n - 2 &&
           rest < (in.n + 3) / 4;
}

bool run_combine_case(const PartitionInput& in, std::string& fail_detail) {
    try {
        PartitionGrouping g = combine(in);
        if (!validate_grouping(in, g) || !three_preference_ok(in, g)) {
            std::ostringstream out;
            out << "invalid grouping for n=" << in.n << " parts=";
            for (int p : in.parts) out << p << ",";
            fail_detail = out.str();
            return false;
        }
        return true;
    } catch (const std::exception& e) {
        std::ostringstream out;
        out << "combine failed for n=" << in.n << " parts=";
        for (int p : in.parts) out << p << ",";
        out << " (" << e.what() << ")";
        fail_detail = out.str();
        return false;
    }
}

long long enumerate_descending(int n, long long lo, long long hi, int max_part, int prev,
                               std::vector<int>& cur, long long& checked,
                               std::string& fail_detail, bool& ok) {
    long long sum = 0;
    for (int p : cur) sum += p;
    if (sum >= lo && !cur.empty()) {
        ++checked;
        if (ok && !run_combine_case(PartitionInput{n, cur}, fail_detail)) ok = false;
    }
    for (int p = std::min(prev, max_part); p >= 1; --p) {
        if (sum + p > hi) continue;
        cur.push_back(p);
        enumerate_descending(n, lo, hi, max_part, p, cur, checked, fail_detail, ok);
        cur.pop_back();
    }
    return checked;
}

}  // namespace

SelftestResult selftest_lemma2(long long random_sequences) {
    SelftestResult result{"lemma2", true, ""};
    long long checked = 0;
    std::string fail_detail;
    for (int n = 2; n <= 12; ++n) {
        long long lo = std::max(2LL, 2LL * n - 3 + (n - 1) / 4);
        long long hi = 3LL * n + 4;
        std::vector<int> cur;
        enumerate_descending(n, lo, hi, n - 1, n - 1, cur, checked, fail_detail, result.pass);
    }
    long long randoms = 0;
    SplitMix64 g(0x1e22a7);
    while (randoms < random_sequences && result.pass) {
        int n = 2 + static_cast<int>(g.next() % 11);
        long long lo = std::max(2LL, 2LL * n - 3 + (n - 1) / 4);
        long long hi = 6LL * n;
        long long target = lo + static_cast<long long>(g.next() % (hi - lo + 1));
        std::vector<int> parts;
        int prev = n - 1;
        long long remaining = target;
        while (remaining > 0) {
            int cap = static_cast<int>(std::min<long long>(prev, remaining));
            int p = 1 + static_cast<int>(g.next() % cap);
            parts.push_back(p);
            prev = p;
            remaining -= p;
        }
        ++randoms;
        if (!run_combine_case(PartitionInput{n, parts}, fail_detail)) result.pass = false;
    }
    std::ostringstream detail;
    detail << checked << " exhaustive + " << randoms << " random sequences";
    if (!result.pass) detail << "; first failure: " << fail_detail;
    result.detail = detail.str();
    return result;
}

SelftestResult selftest_f_lemma(long long instances) {
    SelftestResult result{"f-lemma", true, ""};
    const double densities[] = {0.2, 0.5, 0.8};
    long long applicable = 0, skipped = 0;
    std::ostringstream fail;
    for (long long i = 0; i < instances; ++i) {
        int order = 8 + static_cast<int>(i % 9);
        double p = densities[(i / 9) % 3];
        uint64_t seed = derive_seed(0xF1E27, static_cast<uint64_t>(i));
        EdgeColoring c = random_coloring(order, p, seed);
        FLemmaReport rep = verify_f_lemma_instance(c);
        if (!rep.applicable) {
            ++skipped;
            continue;
        }
        ++applicable;
        if (!rep.pass) {
            result.pass = false;
            fail << "; falsified at order=" << order << " p=" << p << " seed=" << seed
                 << " (k*=" << rep.max_blue_packing << " u*=" << rep.residual
                 << " bound=" << rep.bound << " matching=" << rep.max_red_matching << ")";
            break;
        }
    }
    std::ostringstream detail;
    detail << applicable << " applicable + " << skipped << " skipped (k*=0) of " << instances
           << " instances" << fail.str();
    result.detail = detail.str();
    return result;
}

SelftestResult selftest_ramsey_small() {
    SelftestResult result{"ramsey-small", true, ""};
    SmallRamseyReport rep = verify_small_ramsey_match_quads();
    result.pass = rep.pass();
    std::ostringstream detail;
    detail << "witness: red matching " << rep.witness_red_matching << ", blue packing "
           << rep.witness_blue_packing << (rep.witness_pass ? " (pass)" : " (FAIL)")
           << "; upper: " << rep.enumerated_total << " red graphs with matching number <= 1 ("
           << rep.star_terms << " star terms before dedup), " << rep.upper_failures
           << " failures";
    result.detail = detail.str();
    return result;
}

std::vector<SelftestResult> selftest_all() {
    return {selftest_lemma2(), selftest_f_lemma(), selftest_ramsey_small()};
}

}  // namespace ccm
