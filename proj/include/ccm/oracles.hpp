#ifndef CCM_ORACLES_HPP
#define CCM_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "ccm/coloring.hpp"
#include "ccm/kernels.hpp"

namespace ccm {

/// Guaranteed red matching size in any 2-coloring of K_{4k+u} whose blue
/// K4 packing number is at most k:
///   0 for u <= 3, u-3 for 4 <= u <= k+3, floor((u+k-2)/2) for u >= k+4.
/// Requires k >= 1, u >= 0.
int guaranteed_red_matching(int k, int u);

/// R(mK2, (k+1)K4) = 3k+2m+2 when k < m-1, else 4k+m+3. m >= 1, k >= 0.
int ramsey_match_quads(int m, int k);

/// R(mK3, (k+1)K4) = 3k+3m+4 when k < m-1, else 4k+2m+5. m >= 1, k >= 1.
int ramsey_triangles_quads(int m, int k);

/// One randomized instance check of the matching guarantee: exact blue
/// packing k*, residual u* = N-4k*, exact red matching vs the bound.
/// Instances with k* = 0 are outside the guarantee and reported as skipped.
struct FLemmaReport {
    int order = 0;
    int max_blue_packing = 0;
    int residual = 0;
    int bound = 0;
    int max_red_matching = 0;
    bool applicable = false;
    bool pass = false;
};

FLemmaReport verify_f_lemma_instance(const EdgeColoring& c,
                                     const SearchBudget& budget = SearchBudget::from_env());

/// All red edge sets with matching number <= 1 on `order` vertices, as edge
/// bitmasks in lexicographic pair order: the empty set, nonempty subgraphs
/// of a star, and full triangles. star_terms, when given, receives the
/// center-by-center term count before dedup (order*(2^(order-1)-1)+1).
std::vector<uint64_t> enumerate_matching_le1_graphs(int order, long long* star_terms = nullptr);

/// Machine check of R(2K2, 2K4) = 9 on both sides: a K8 witness coloring
/// avoiding red 2K2 and blue 2K4, and the exhaustive upper check that every
/// red graph on 9 vertices with matching number <= 1 leaves a blue 2K4.
struct SmallRamseyReport {
    bool witness_pass = false;
    int witness_red_matching = 0;
    int witness_blue_packing = 0;
    bool upper_pass = false;
    long long star_terms = 0;
    long long enumerated_total = 0;
    long long upper_failures = 0;

    bool pass() const { return witness_pass && upper_pass; }
};

SmallRamseyReport verify_small_ramsey_match_quads(
    const SearchBudget& budget = SearchBudget::from_env());

}  // namespace ccm

#endif
