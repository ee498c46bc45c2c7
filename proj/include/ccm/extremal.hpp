#ifndef CCM_EXTREMAL_HPP
#define CCM_EXTREMAL_HPP

#include <vector>

#include "ccm/coloring.hpp"
#include "ccm/kernels.hpp"

namespace ccm {

/// Vertex layout of the lower-bound coloring on 13n-4 vertices: a block A
/// of n-1 vertices whose edges are all red, then three blue blocks of 4n-1.
struct ExtremalLayout {
    int n;
    int order;       // 13n-4
    int block_size;  // 4n-1
    int isolated;    // |A| = n-1

    VertexSet isolated_set() const;
    VertexSet block(int i) const;  // i in 0..2
};

ExtremalLayout extremal_layout(int n);

/// The coloring itself: edges inside each blue block are blue, every other
/// edge (between blocks, and anything touching A) is red. n >= 2.
EdgeColoring build_extremal(int n);

/// Absence verdict for monochromatic connected nK4: for each color and each
/// component of that color, exhaustively refutes (or finds) a packing of n
/// disjoint quads. On failure carries the offending component and packing.
struct AbsenceReport {
    bool absent = true;
    Color witness_color = Color::Red;
    VertexSet witness_component;
    std::vector<Quad> witness_quads;
};

AbsenceReport check_absence(const EdgeColoring& c, int n,
                            const SearchBudget& budget = SearchBudget::from_env());

}  // namespace ccm

#endif
