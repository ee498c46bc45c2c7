#include "ccm/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

SearchBudget SearchBudget::from_env() {
    SearchBudget b;
    if (const char* env = std::getenv("RAMSEY_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_nodes = v;
    }
    return b;
}

namespace {

struct BudgetTracker {
    uint64_t cap;
    uint64_t used = 0;
    void tick() {
        if (++used > cap) throw SearchBudgetExhausted(cap);
    }
};

std::vector<VertexSet> components_within(const std::vector<VertexSet>& adj,
                                         const VertexSet& within) {
    std::vector<VertexSet> comps;
    const int n = within.universe();
    VertexSet unseen = within;
    while (!unseen.empty()) {
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.set(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            unseen -= frontier;
            VertexSet nxt(n);
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) nxt |= adj[v];
            nxt &= unseen;
            frontier = nxt;
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

template <int R>
std::vector<std::array<int, R>> enumerate_cliques(const std::vector<VertexSet>& adj,
                                                  const VertexSet& within,
                                                  BudgetTracker& budget) {
    std::vector<std::array<int, R>> out;
    for (int u = within.first(); u >= 0; u = within.next(u)) {
        VertexSet a = adj[u] & within;
        a.clear_below(u + 1);
        for (int v = a.first(); v >= 0; v = a.next(v)) {
            VertexSet b = a & adj[v];
            b.clear_below(v + 1);
            for (int w = b.first(); w >= 0; w = b.next(w)) {
                if constexpr (R == 3) {
                    budget.tick();
                    out.push_back({u, v, w});
                } else {
                    VertexSet d = b & adj[w];
                    d.clear_below(w + 1);
                    for (int x = d.first(); x >= 0; x = d.next(x)) {
                        budget.tick();
                        out.push_back({u, v, w, x});
                    }
                }
            }
        }
    }
    return out;
}

// --- local masks over a remapped component (<= 64 vertices fast path) ---

struct Mask64 {
    uint64_t w = 0;
    explicit Mask64(int = 0) {}
    void set(int v) { w |= 1ULL << v; }
    bool test(int v) const { return (w >> v) & 1; }
    bool intersects(const Mask64& o) const { return (w & o.w) != 0; }
    void add(const Mask64& o) { w |= o.w; }
    int count() const { return std::popcount(w); }
    int count_and(const Mask64& o) const { return std::popcount(w & o.w); }
    int first() const { return w ? std::countr_zero(w) : -1; }
    template <class F>
    void for_each(F&& f) const {
        uint64_t x = w;
        while (x) {
            f(std::countr_zero(x));
            x &= x - 1;
        }
    }
};

struct MaskWide {
    std::vector<uint64_t> w;
    explicit MaskWide(int universe = 0) : w((universe + 63) / 64, 0) {}
    void set(int v) { w[v >> 6] |= 1ULL << (v & 63); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    bool intersects(const MaskWide& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    void add(const MaskWide& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    int count_and(const MaskWide& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
        return c;
    }
    int first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
        return -1;
    }
    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t x = w[i];
            while (x) {
                f(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
};

template <class Mask>
Mask greedy_hitting_set(const std::vector<Mask>& cliques, int m) {
    Mask hit(m);
    std::vector<char> alive(cliques.size(), 1);
    size_t remaining = cliques.size();
    std::vector<int> cnt(m);
    while (remaining > 0) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (size_t i = 0; i < cliques.size(); ++i)
            if (alive[i]) cliques[i].for_each([&](int v) { ++cnt[v]; });
        int best_v = 0;
        for (int v = 1; v < m; ++v)
            if (cnt[v] > cnt[best_v]) best_v = v;
        hit.set(best_v);
        for (size_t i = 0; i < cliques.size(); ++i)
            if (alive[i] && cliques[i].test(best_v)) {
                alive[i] = 0;
                --remaining;
            }
    }
    return hit;
}

// Exact clique packing over an explicit clique list. Branches on the least
// vertex still covered by a live clique: one child per clique through it
// (lexicographic order), then the child excluding the vertex. Bounds:
// floor(|active|/R) and |hitting ∩ active|.
template <class Mask, int R>
struct PackingSolver {
    const std::vector<Mask>& masks;
    Mask hitting;
    BudgetTracker& budget;
    int target;  // > 0: stop as soon as reached; 0: exact maximum

    int best = 0;
    std::vector<int> best_sel;
    std::vector<int> cur;
    bool hit_target = false;

    PackingSolver(const std::vector<Mask>& masks, Mask hitting, BudgetTracker& budget,
                  int target)
        : masks(masks), hitting(std::move(hitting)), budget(budget), target(target) {}

    void search(const std::vector<int>& live, int universe) {
        budget.tick();
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_sel = cur;
            if (target > 0 && best >= target) {
                hit_target = true;
                return;
            }
        }
        if (live.empty()) return;
        Mask active(universe);
        for (int qi : live) active.add(masks[qi]);
        // prune against the incumbent, never the target: when the target is
        // out of reach the caller still needs this component's exact maximum
        int ub = static_cast<int>(cur.size()) +
                 std::min(active.count() / R, hitting.count_and(active));
        if (ub <= best) return;
        int v = active.first();
        std::vector<int> child;
        child.reserve(live.size());
        for (int qi : live) {
            if (!masks[qi].test(v)) continue;
            child.clear();
            for (int qj : live)
                if (!masks[qj].intersects(masks[qi])) child.push_back(qj);
            cur.push_back(qi);
            search(child, universe);
            cur.pop_back();
            if (hit_target) return;
        }
        child.clear();
        for (int qi : live)
            if (!masks[qi].test(v)) child.push_back(qi);
        search(child, universe);
    }
};

template <class Mask, int R>
std::vector<int> solve_packing_local(const std::vector<Mask>& masks, int m, int target,
                                     BudgetTracker& budget) {
    // greedy lexicographic pass; often already reaches a decision target
    std::vector<int> greedy;
    {
        Mask used(m);
        for (size_t i = 0; i < masks.size(); ++i) {
            if (used.intersects(masks[i])) continue;
            used.add(masks[i]);
            greedy.push_back(static_cast<int>(i));
            if (target > 0 && static_cast<int>(greedy.size()) >= target) return greedy;
        }
    }
    Mask hitting = greedy_hitting_set(masks, m);
    PackingSolver<Mask, R> solver(masks, std::move(hitting), budget, target);
    std::vector<int> live(masks.size());
    for (size_t i = 0; i < masks.size(); ++i) live[i] = static_cast<int>(i);
    solver.search(live, m);
    return solver.best_sel;
}

// Packing within one component: cliques in global ids, result indices into it.
template <int R>
std::vector<int> solve_component(const std::vector<std::array<int, R>>& cliques,
                                 const VertexSet& comp, int target, BudgetTracker& budget) {
    std::vector<int> verts = comp.to_vector();
    const int m = static_cast<int>(verts.size());
    std::vector<int> pos(comp.universe(), -1);
    for (int i = 0; i < m; ++i) pos[verts[i]] = i;
    if (m <= 64) {
        std::vector<Mask64> masks(cliques.size(), Mask64(m));
        for (size_t i = 0; i < cliques.size(); ++i)
            for (int j = 0; j < R; ++j) masks[i].set(pos[cliques[i][j]]);
        return solve_packing_local<Mask64, R>(masks, m, target, budget);
    }
    std::vector<MaskWide> masks(cliques.size(), MaskWide(m));
    for (size_t i = 0; i < cliques.size(); ++i)
        for (int j = 0; j < R; ++j) masks[i].set(pos[cliques[i][j]]);
    return solve_packing_local<MaskWide, R>(masks, m, target, budget);
}

// Exact packing of disjoint color-K_R cliques inside `within`, solved per
// component of the color class and concatenated. target > 0 stops globally
// once that many cliques are collected.
template <int R>
std::pair<std::vector<std::array<int, R>>, std::map<int, int>> solve_packing(
    const EdgeColoring& c, Color color, const VertexSet& within, int target,
    const SearchBudget& budget) {
    BudgetTracker tracker{budget.max_nodes};
    auto adj = c.adjacency(color);
    auto comps = components_within(adj, within);
    std::vector<std::array<int, R>> result;
    std::map<int, int> per_component;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        int remaining = target > 0 ? target - static_cast<int>(result.size()) : 0;
        auto cliques = enumerate_cliques<R>(adj, comps[ci], tracker);
        std::vector<int> sel =
            cliques.empty() ? std::vector<int>{}
                            : solve_component<R>(cliques, comps[ci], remaining, tracker);
        per_component[static_cast<int>(ci)] = static_cast<int>(sel.size());
        for (int qi : sel) result.push_back(cliques[qi]);
        if (target > 0 && static_cast<int>(result.size()) >= target) break;
    }
    return {std::move(result), std::move(per_component)};
}

}  // namespace

std::optional<std::pair<Color, Quad>> find_mono_k4(const EdgeColoring& c,
                                                   const VertexSet& within) {
    for (Color color : {Color::Red, Color::Blue}) {
        auto adj = c.adjacency(color);
        for (int u = within.first(); u >= 0; u = within.next(u)) {
            VertexSet a = adj[u] & within;
            a.clear_below(u + 1);
            for (int v = a.first(); v >= 0; v = a.next(v)) {
                VertexSet b = a & adj[v];
                b.clear_below(v + 1);
                for (int w = b.first(); w >= 0; w = b.next(w)) {
                    VertexSet d = b & adj[w];
                    d.clear_below(w + 1);
                    int x = d.first();
                    if (x >= 0) return std::make_pair(color, Quad{u, v, w, x});
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Color, Quad>> greedy_mono_k4_packing(const EdgeColoring& c) {
    std::vector<std::pair<Color, Quad>> out;
    VertexSet remaining = c.all_vertices();
    while (remaining.count() >= 18) {
        auto found = find_mono_k4(c, remaining);
        if (!found)
            throw TheoremViolation("greedy_mono_k4_packing",
                                   "no monochromatic K4 among " +
                                       std::to_string(remaining.count()) +
                                       " vertices; contradicts R(4,4)=18",
                                   serialize_coloring(c));
        for (int v : found->second) remaining.reset(v);
        out.push_back(*found);
    }
    return out;
}

CliquePacking max_k4_packing(const EdgeColoring& c, Color color, const VertexSet& within,
                             const SearchBudget& budget) {
    auto [quads, counts] = solve_packing<4>(c, color, within, 0, budget);
    return CliquePacking{color, std::move(quads), std::move(counts)};
}

std::optional<std::vector<Quad>> find_k4_packing(const EdgeColoring& c, Color color,
                                                 const VertexSet& within, int target,
                                                 const SearchBudget& budget) {
    if (target <= 0) return std::vector<Quad>{};
    auto [quads, counts] = solve_packing<4>(c, color, within, target, budget);
    if (static_cast<int>(quads.size()) < target) return std::nullopt;
    return std::move(quads);
}

std::optional<std::vector<Triangle>> find_triangle_matching(const EdgeColoring& c, Color color,
                                                            const VertexSet& within, int m,
                                                            const SearchBudget& budget) {
    if (m < 0) throw InvalidInput("triangle count must be >= 0");
    if (m == 0) return std::vector<Triangle>{};
    auto [tris, counts] = solve_packing<3>(c, color, within, m, budget);
    if (static_cast<int>(tris.size()) < m) return std::nullopt;
    return std::move(tris);
}

// --- maximum matching (Edmonds blossom over the induced color class) ---

namespace {

class BlossomMatcher {
public:
    BlossomMatcher(const EdgeColoring& c, Color color, std::vector<int> verts)
        : verts_(std::move(verts)), m_(static_cast<int>(verts_.size())), g_(m_) {
        for (int i = 0; i < m_; ++i)
            for (int j = i + 1; j < m_; ++j)
                if (c.color_of(verts_[i], verts_[j]) == color) {
                    g_[i].push_back(j);
                    g_[j].push_back(i);
                }
        match_.assign(m_, -1);
        p_.assign(m_, -1);
        base_.assign(m_, 0);
    }

    std::vector<std::pair<int, int>> run() {
        // greedy seed, then augment from every remaining free vertex
        for (int v = 0; v < m_; ++v)
            if (match_[v] < 0)
                for (int u : g_[v])
                    if (match_[u] < 0) {
                        match_[v] = u;
                        match_[u] = v;
                        break;
                    }
        for (int v = 0; v < m_; ++v)
            if (match_[v] < 0) {
                int end = find_augmenting_path(v);
                while (end >= 0) {
                    int pv = p_[end], ppv = match_[pv];
                    match_[end] = pv;
                    match_[pv] = end;
                    end = ppv;
                }
            }
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < m_; ++v)
            if (match_[v] > v) edges.emplace_back(verts_[v], verts_[match_[v]]);
        std::sort(edges.begin(), edges.end());
        return edges;
    }

private:
    int lca(int a, int b) {
        std::vector<char> used(m_, 0);
        int v = a;
        while (true) {
            v = base_[v];
            used[v] = 1;
            if (match_[v] < 0) break;
            v = p_[match_[v]];
        }
        v = b;
        while (!used[base_[v]]) v = p_[match_[base_[v]]];
        return base_[v];
    }

    void mark_path(int v, int b, int child, std::vector<char>& blossom) {
        while (base_[v] != b) {
            blossom[base_[v]] = 1;
            blossom[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < m_; ++i) base_[i] = i;
        std::vector<char> used(m_, 0);
        std::vector<int> queue;
        used[root] = 1;
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : g_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
                    int curbase = lca(v, to);
                    std::vector<char> blossom(m_, 0);
                    mark_path(v, curbase, to, blossom);
                    mark_path(to, curbase, v, blossom);
                    for (int i = 0; i < m_; ++i)
                        if (blossom[base_[i]]) {
                            base_[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (p_[to] < 0) {
                    p_[to] = v;
                    if (match_[to] < 0) return to;
                    used[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    std::vector<int> verts_;
    int m_;
    std::vector<std::vector<int>> g_;
    std::vector<int> match_, p_, base_;
};

}  // namespace

Matching max_matching(const EdgeColoring& c, Color color, const VertexSet& within) {
    BlossomMatcher matcher(c, color, within.to_vector());
    return Matching{color, matcher.run()};
}

}  // namespace ccm
