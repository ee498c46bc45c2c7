#ifndef CCM_KERNELS_HPP
#define CCM_KERNELS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ccm/coloring.hpp"
#include "ccm/vertex_set.hpp"

namespace ccm {

/// Node cap for the exact searches. Exhaustion raises
/// SearchBudgetExhausted; there is no approximate fallback.
struct SearchBudget {
    uint64_t max_nodes = 100'000'000;

    /// Default budget, overridden by the RAMSEY_NODE_BUDGET env var.
    static SearchBudget from_env();
};

using Quad = std::array<int, 4>;
using Triangle = std::array<int, 3>;

/// Pairwise-disjoint monochromatic K4s of one color. When the packing was
/// solved against a component decomposition, per_component_counts maps the
/// component's index in that decomposition to the number of quads inside it.
struct CliquePacking {
    Color color;
    std::vector<Quad> quads;
    std::map<int, int> per_component_counts;

    int size() const { return static_cast<int>(quads.size()); }
};

/// Pairwise vertex-disjoint edges of one color.
struct Matching {
    Color color;
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

/// First monochromatic K4 inside `within` in deterministic order
/// (red scanned before blue, quads lexicographic). Exhaustive: empty
/// result proves absence. Succeeds whenever |within| >= 18 (R(4,4) = 18).
std::optional<std::pair<Color, Quad>> find_mono_k4(const EdgeColoring& c,
                                                   const VertexSet& within);

/// Repeatedly extracts a monochromatic quad while >= 18 vertices remain.
/// On an order-(13n-3) coloring yields >= 3n-4+floor((n-1)/4) quads.
std::vector<std::pair<Color, Quad>> greedy_mono_k4_packing(const EdgeColoring& c);

/// Exact maximum packing of disjoint color-K4s inside `within`, solved per
/// component of the color class and concatenated. Branch and bound over the
/// enumerated quad list: branches on the least vertex still in some quad,
/// quads in lexicographic order; bounds are floor(active/4) and a greedy
/// hitting set of all quads. Deterministic.
CliquePacking max_k4_packing(const EdgeColoring& c, Color color, const VertexSet& within,
                             const SearchBudget& budget = SearchBudget::from_env());

/// Decision form: some packing of `target` disjoint color-K4s inside
/// `within`, or nullopt after exhaustive refutation.
std::optional<std::vector<Quad>> find_k4_packing(const EdgeColoring& c, Color color,
                                                 const VertexSet& within, int target,
                                                 const SearchBudget& budget = SearchBudget::from_env());

/// Exact maximum matching of the color class induced on `within`
/// (Edmonds blossom). Edges are reported as ordered pairs, sorted.
Matching max_matching(const EdgeColoring& c, Color color, const VertexSet& within);

/// m pairwise-disjoint monochromatic triangles inside `within`, or nullopt
/// after exhaustive refutation.
std::optional<std::vector<Triangle>> find_triangle_matching(
    const EdgeColoring& c, Color color, const VertexSet& within, int m,
    const SearchBudget& budget = SearchBudget::from_env());

}  // namespace ccm

#endif
