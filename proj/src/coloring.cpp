#include "ccm/coloring.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "ccm/errors.hpp"

namespace ccm {

EdgeColoring::EdgeColoring(int order) : order_(order) {
    if (order < 1) throw InvalidInput("coloring order must be >= 1");
    red_.assign(order, VertexSet(order));
}

void EdgeColoring::set_color(int u, int v, Color c) {
    if (u == v) throw InvalidInput("loops are not colorable");
    if (c == Color::Red) {
        red_[u].set(v);
        red_[v].set(u);
    } else {
        red_[u].reset(v);
        red_[v].reset(u);
    }
}

VertexSet EdgeColoring::blue_neighbors(int v) const {
    VertexSet b = red_[v].complement();
    b.reset(v);
    return b;
}

std::vector<VertexSet> EdgeColoring::adjacency(Color c) const {
    std::vector<VertexSet> adj;
    adj.reserve(order_);
    for (int v = 0; v < order_; ++v)
        adj.push_back(c == Color::Red ? red_[v] : blue_neighbors(v));
    return adj;
}

EdgeColoring EdgeColoring::swapped() const {
    EdgeColoring s(order_);
    for (int v = 0; v < order_; ++v) s.red_[v] = blue_neighbors(v);
    return s;
}

EdgeColoring EdgeColoring::induced(const std::vector<int>& keep) const {
    if (keep.empty()) throw InvalidInput("induced subcoloring needs at least one vertex");
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= order_)
            throw InvalidInput("induced vertex out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw InvalidInput("induced vertex list must be strictly increasing");
    }
    EdgeColoring sub(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (is_red(keep[i], keep[j]))
                sub.set_color(static_cast<int>(i), static_cast<int>(j), Color::Red);
    return sub;
}

ComponentDecomposition components(const EdgeColoring& c, Color color) {
    const int n = c.order();
    auto adj = c.adjacency(color);
    ComponentDecomposition out{color, {}};
    VertexSet unseen = VertexSet::full(n);
    while (!unseen.empty()) {
        int start = unseen.first();
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.set(start);
        while (!frontier.empty()) {
            comp |= frontier;
            unseen -= frontier;
            VertexSet nxt(n);
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                nxt |= adj[v];
            nxt &= unseen;
            frontier = nxt;
        }
        out.components.push_back(std::move(comp));
    }
    return out;  // BFS starts ascend, so components are ordered by min vertex
}

bool is_connected(const EdgeColoring& c, Color color, const VertexSet& within) {
    if (within.count() <= 1) return true;
    auto adj = c.adjacency(color);
    VertexSet reached(c.order());
    VertexSet frontier(c.order());
    frontier.set(within.first());
    while (!frontier.empty()) {
        reached |= frontier;
        VertexSet nxt(c.order());
        for (int v = frontier.first(); v >= 0; v = frontier.next(v)) nxt |= adj[v];
        nxt &= within;
        nxt -= reached;
        frontier = nxt;
    }
    return reached == within;
}

Color connected_color(const EdgeColoring& c) {
    if (components(c, Color::Red).components.size() == 1) return Color::Red;
    if (components(c, Color::Blue).components.size() != 1)
        throw std::logic_error("both color classes disconnected; impossible for complements");
    return Color::Blue;
}

namespace {

struct Line {
    int number = 0;
    std::string text;
};

// Substantive lines: blank lines and '#' comments are skipped.
std::vector<Line> substantive_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t pos = raw.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (raw[pos] == '#') continue;
        lines.push_back({no, raw});
    }
    return lines;
}

long long pair_index(int u, int v, int n) {
    // lexicographic rank of (u,v), u < v, 0-indexed pairs over 1..n externally
    long long before = static_cast<long long>(u) * n - static_cast<long long>(u) * (u + 1) / 2;
    return before + (v - u - 1);
}

EdgeColoring parse_edge_lines(int n, const std::vector<Line>& lines, size_t from) {
    EdgeColoring c(n);
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<bool> seen(total, false);
    long long count = 0;
    int last_line = lines.empty() ? 1 : lines.back().number;
    for (size_t i = from; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        std::istringstream iss(ln.text);
        std::string tag;
        long long u = 0, v = 0;
        std::string col;
        if (!(iss >> tag) || tag != "e")
            throw ParseError(ln.number, "malformed edge line (expected \"e <u> <v> <c>\")");
        std::string trail;
        if (!(iss >> u >> v >> col) || (iss >> trail))
            throw ParseError(ln.number, "malformed edge line (expected \"e <u> <v> <c>\")");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(ln.number, "out-of-range vertex");
        if (u >= v)
            throw ParseError(ln.number, "malformed edge line (vertices must satisfy u < v)");
        if (col != "r" && col != "b")
            throw ParseError(ln.number, "malformed edge line (color must be r or b)");
        long long idx = pair_index(static_cast<int>(u) - 1, static_cast<int>(v) - 1, n);
        if (seen[idx])
            throw ParseError(ln.number, "duplicate edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
        seen[idx] = true;
        ++count;
        if (col == "r")
            c.set_color(static_cast<int>(u) - 1, static_cast<int>(v) - 1, Color::Red);
    }
    if (count != total) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!seen[pair_index(u, v, n)])
                    throw ParseError(last_line + 1,
                                     "missing edge (" + std::to_string(u + 1) + "," +
                                         std::to_string(v + 1) + ")");
    }
    return c;
}

int hex_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

EdgeColoring parse_hex_payload(int n, const std::vector<Line>& lines, size_t from) {
    if (lines.size() != from + 1)
        throw ParseError(lines.size() > from + 1 ? lines[from + 1].number
                                                 : (lines.empty() ? 2 : lines.back().number + 1),
                         "eccx format expects exactly one payload line \"x <hex>\"");
    const Line& ln = lines[from];
    std::istringstream iss(ln.text);
    std::string tag, hex, trail;
    if (!(iss >> tag >> hex) || tag != "x" || (iss >> trail))
        throw ParseError(ln.number, "malformed hex payload (expected \"x <hex>\")");
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long digits = (bits + 3) / 4;
    if (static_cast<long long>(hex.size()) != digits)
        throw ParseError(ln.number, "malformed hex payload (expected " + std::to_string(digits) +
                                        " hex digits, got " + std::to_string(hex.size()) + ")");
    EdgeColoring c(n);
    long long bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            int d = hex_value(hex[bit / 4]);
            if (d < 0) throw ParseError(ln.number, "malformed hex payload (non-hex digit)");
            if ((d >> (3 - bit % 4)) & 1) c.set_color(u, v, Color::Red);
        }
    }
    for (long long pad = bits; pad < digits * 4; ++pad) {
        int d = hex_value(hex[pad / 4]);
        if (d < 0) throw ParseError(ln.number, "malformed hex payload (non-hex digit)");
        if ((d >> (3 - pad % 4)) & 1)
            throw ParseError(ln.number, "malformed hex payload (nonzero padding bits)");
    }
    return c;
}

}  // namespace

EdgeColoring parse_coloring(std::istream& in) {
    auto lines = substantive_lines(in);
    if (lines.empty()) throw ParseError(1, "malformed header (empty input)");
    std::istringstream hdr(lines[0].text);
    std::string p, fmt, trail;
    long long n = 0;
    if (!(hdr >> p >> fmt >> n) || p != "p" || (fmt != "ecc" && fmt != "eccx") || (hdr >> trail))
        throw ParseError(lines[0].number, "malformed header (expected \"p ecc <N>\" or \"p eccx <N>\")");
    if (n < 1 || n > 100000)
        throw ParseError(lines[0].number, "malformed header (vertex count out of range)");
    if (fmt == "ecc") return parse_edge_lines(static_cast<int>(n), lines, 1);
    return parse_hex_payload(static_cast<int>(n), lines, 1);
}

EdgeColoring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    return parse_coloring(in);
}

std::string serialize_coloring(const EdgeColoring& c, bool compact) {
    std::ostringstream out;
    const int n = c.order();
    if (!compact) {
        out << "p ecc " << n << "\n";
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                out << "e " << u + 1 << " " << v + 1 << " " << (c.is_red(u, v) ? 'r' : 'b')
                    << "\n";
        return out.str();
    }
    out << "p eccx " << n << "\n";
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const long long digits = (bits + 3) / 4;
    std::string hex(digits, '0');
    long long bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (c.is_red(u, v)) {
                int d = hex_value(hex[bit / 4]);
                d |= 1 << (3 - bit % 4);
                hex[bit / 4] = "0123456789abcdef"[d];
            }
    out << "x " << hex << "\n";
    return out.str();
}

}  // namespace ccm
