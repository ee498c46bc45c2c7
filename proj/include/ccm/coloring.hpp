#ifndef CCM_COLORING_HPP
#define CCM_COLORING_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ccm/vertex_set.hpp"

namespace ccm {

enum class Color : uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

/// A 2-edge-coloring of the complete graph on `order` vertices.
///
/// Only red adjacency is stored; blue is the complement within K_N minus
/// loops, so every pair carries exactly one color by construction.
/// Vertices are 0-indexed here; file formats and CLI output are 1-indexed.
/// Immutable once built (set_color is the builder interface).
class EdgeColoring {
public:
    explicit EdgeColoring(int order);

    int order() const { return order_; }

    bool is_red(int u, int v) const { return red_[u].test(v); }
    Color color_of(int u, int v) const { return is_red(u, v) ? Color::Red : Color::Blue; }

    void set_color(int u, int v, Color c);

    const VertexSet& red_neighbors(int v) const { return red_[v]; }
    VertexSet blue_neighbors(int v) const;
    VertexSet neighbors(int v, Color c) const {
        return c == Color::Red ? red_[v] : blue_neighbors(v);
    }

    VertexSet all_vertices() const { return VertexSet::full(order_); }

    /// Per-vertex adjacency of one color class, materialized.
    std::vector<VertexSet> adjacency(Color c) const;

    /// The same coloring with the two color classes exchanged.
    EdgeColoring swapped() const;

    /// Induced subcoloring on `keep` (0-indexed, strictly increasing),
    /// relabeled to 0..keep.size()-1.
    EdgeColoring induced(const std::vector<int>& keep) const;

    bool operator==(const EdgeColoring&) const = default;

private:
    int order_;
    std::vector<VertexSet> red_;
};

/// Connected components of one color class, ordered by minimum vertex;
/// singletons included.
struct ComponentDecomposition {
    Color color;
    std::vector<VertexSet> components;
};

ComponentDecomposition components(const EdgeColoring& c, Color color);

/// True iff the color class induced on `within` is connected
/// (empty and singleton sets count as connected).
bool is_connected(const EdgeColoring& c, Color color, const VertexSet& within);

/// A color whose class spans all vertices connectedly; red wins ties.
/// At least one class of any 2-coloring is connected.
Color connected_color(const EdgeColoring& c);

// --- file format (see README: "p ecc N" edge lines, "p eccx N" hex) ---

EdgeColoring parse_coloring(std::istream& in);
EdgeColoring parse_coloring(const std::string& text);
std::string serialize_coloring(const EdgeColoring& c, bool compact = false);

}  // namespace ccm

#endif
