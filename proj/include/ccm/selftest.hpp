#ifndef CCM_SELFTEST_HPP
#define CCM_SELFTEST_HPP

#include <string>
#include <vector>

namespace ccm {

struct SelftestResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Exhaustive Lemma 2 oracle: every descending sequence with parts in
/// [1,n-1] and total in [max(2, 2n-3+floor((n-1)/4)), 3n+4] for n in 2..12,
/// plus `random_sequences` random inputs with totals up to 6n.
SelftestResult selftest_lemma2(long long random_sequences = 100000);

/// Randomized matching-guarantee verification: `instances` colorings across
/// orders 8..16 and red densities {0.2, 0.5, 0.8}; every applicable instance
/// must meet the guaranteed red matching size exactly computed.
SelftestResult selftest_f_lemma(long long instances = 10000);

/// R(2K2,2K4) = 9 on both sides (witness on K8, exhaustive upper on K9).
SelftestResult selftest_ramsey_small();

std::vector<SelftestResult> selftest_all();

}  // namespace ccm

#endif
