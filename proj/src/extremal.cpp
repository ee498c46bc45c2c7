#include "ccm/extremal.hpp"

#include "ccm/errors.hpp"

namespace ccm {

VertexSet ExtremalLayout::isolated_set() const {
    VertexSet s(order);
    for (int v = 0; v < isolated; ++v) s.set(v);
    return s;
}

VertexSet ExtremalLayout::block(int i) const {
    VertexSet s(order);
    int start = isolated + i * block_size;
    for (int v = start; v < start + block_size; ++v) s.set(v);
    return s;
}

ExtremalLayout extremal_layout(int n) {
    if (n < 2) throw InvalidInput("extremal construction requires n >= 2");
    return ExtremalLayout{n, 13 * n - 4, 4 * n - 1, n - 1};
}

EdgeColoring build_extremal(int n) {
    ExtremalLayout lay = extremal_layout(n);
    EdgeColoring c(lay.order);
    auto block_of = [&](int v) { return v < lay.isolated ? -1 : (v - lay.isolated) / lay.block_size; };
    for (int u = 0; u < lay.order; ++u)
        for (int v = u + 1; v < lay.order; ++v) {
            int bu = block_of(u), bv = block_of(v);
            if (bu < 0 || bu != bv) c.set_color(u, v, Color::Red);
        }
    return c;
}

AbsenceReport check_absence(const EdgeColoring& c, int n, const SearchBudget& budget) {
    if (n < 1) throw InvalidInput("absence check requires n >= 1");
    for (Color color : {Color::Red, Color::Blue}) {
        for (const VertexSet& comp : components(c, color).components) {
            if (comp.count() < 4 * n) continue;
            if (auto quads = find_k4_packing(c, color, comp, n, budget)) {
                quads->resize(n);
                return AbsenceReport{false, color, comp, std::move(*quads)};
            }
        }
    }
    return AbsenceReport{true, Color::Red, VertexSet(c.order()), {}};
}

}  // namespace ccm
