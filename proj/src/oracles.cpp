#include "ccm/oracles.hpp"

#include <algorithm>
#include <set>

#include "ccm/errors.hpp"

namespace ccm {

int guaranteed_red_matching(int k, int u) {
    if (k < 1) throw InvalidInput("matching guarantee requires k >= 1");
    if (u < 0) throw InvalidInput("matching guarantee requires u >= 0");
    if (u <= 3) return 0;
    if (u <= k + 3) return u - 3;
    return (u + k - 2) / 2;
}

int ramsey_match_quads(int m, int k) {
    if (m < 1) throw InvalidInput("R(mK2,(k+1)K4) requires m >= 1");
    if (k < 0) throw InvalidInput("R(mK2,(k+1)K4) requires k >= 0");
    return k < m - 1 ? 3 * k + 2 * m + 2 : 4 * k + m + 3;
}

int ramsey_triangles_quads(int m, int k) {
    if (m < 1) throw InvalidInput("R(mK3,(k+1)K4) requires m >= 1");
    if (k < 1) throw InvalidInput("R(mK3,(k+1)K4) requires k >= 1");
    return k < m - 1 ? 3 * k + 3 * m + 4 : 4 * k + 2 * m + 5;
}

FLemmaReport verify_f_lemma_instance(const EdgeColoring& c, const SearchBudget& budget) {
    FLemmaReport r;
    r.order = c.order();
    r.max_blue_packing = max_k4_packing(c, Color::Blue, c.all_vertices(), budget).size();
    r.residual = r.order - 4 * r.max_blue_packing;
    if (r.max_blue_packing < 1) {
        r.applicable = false;
        r.pass = true;  // outside the guarantee's domain
        return r;
    }
    r.applicable = true;
    r.bound = guaranteed_red_matching(r.max_blue_packing, r.residual);
    r.max_red_matching = max_matching(c, Color::Red, c.all_vertices()).size();
    r.pass = r.max_red_matching >= r.bound;
    return r;
}

namespace {

long long edge_index(int u, int v, int order) {
    // lexicographic rank of pair (u,v), u < v, 0-based
    return static_cast<long long>(u) * order - static_cast<long long>(u) * (u + 1) / 2 +
           (v - u - 1);
}

EdgeColoring coloring_from_red_mask(int order, uint64_t mask) {
    EdgeColoring c(order);
    long long bit = 0;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v, ++bit)
            if ((mask >> bit) & 1) c.set_color(u, v, Color::Red);
    return c;
}

}  // namespace

std::vector<uint64_t> enumerate_matching_le1_graphs(int order, long long* star_terms) {
    if (order < 2 || order * (order - 1) / 2 > 63)
        throw InvalidInput("enumeration supports 2 <= order <= 11");
    std::set<uint64_t> sets;
    long long terms = 1;
    sets.insert(0);
    // every nonempty subgraph of the star centered at c
    for (int center = 0; center < order; ++center) {
        std::vector<long long> spokes;
        for (int v = 0; v < order; ++v)
            if (v != center)
                spokes.push_back(edge_index(std::min(center, v), std::max(center, v), order));
        uint64_t subsets = 1ULL << spokes.size();
        terms += static_cast<long long>(subsets) - 1;
        for (uint64_t s = 1; s < subsets; ++s) {
            uint64_t mask = 0;
            for (size_t i = 0; i < spokes.size(); ++i)
                if ((s >> i) & 1) mask |= 1ULL << spokes[i];
            sets.insert(mask);
        }
    }
    // full triangles (their proper subgraphs are star subgraphs already)
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            for (int c = b + 1; c < order; ++c)
                sets.insert((1ULL << edge_index(a, b, order)) |
                            (1ULL << edge_index(a, c, order)) |
                            (1ULL << edge_index(b, c, order)));
    if (star_terms) *star_terms = terms;
    return {sets.begin(), sets.end()};
}

SmallRamseyReport verify_small_ramsey_match_quads(const SearchBudget& budget) {
    SmallRamseyReport report;

    // Lower witness on K8: red class is one triangle, everything else blue.
    EdgeColoring witness(8);
    witness.set_color(0, 1, Color::Red);
    witness.set_color(0, 2, Color::Red);
    witness.set_color(1, 2, Color::Red);
    report.witness_red_matching =
        max_matching(witness, Color::Red, witness.all_vertices()).size();
    report.witness_blue_packing =
        max_k4_packing(witness, Color::Blue, witness.all_vertices(), budget).size();
    report.witness_pass = report.witness_red_matching <= 1 && report.witness_blue_packing <= 1;

    // Upper check: every red graph on 9 vertices with matching number <= 1
    // must leave two disjoint blue K4 in the complement.
    auto masks = enumerate_matching_le1_graphs(9, &report.star_terms);
    report.enumerated_total = static_cast<long long>(masks.size());
    for (uint64_t mask : masks) {
        EdgeColoring c = coloring_from_red_mask(9, mask);
        if (!find_k4_packing(c, Color::Blue, c.all_vertices(), 2, budget)) ++report.upper_failures;
    }
    report.upper_pass = report.upper_failures == 0;
    return report;
}

}  // namespace ccm
