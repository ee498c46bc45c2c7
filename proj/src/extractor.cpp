#include "ccm/extractor.hpp"

#include <algorithm>
#include <sstream>

#include "ccm/errors.hpp"
#include "ccm/oracles.hpp"
#include "ccm/partition.hpp"

namespace ccm {

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::ConnectedPacking: return "connected-packing";
        case CaseTag::ComponentPacking: return "component-packing";
        case CaseTag::Case11: return "case-1.1";
        case CaseTag::Case12: return "case-1.2";
        case CaseTag::Case21: return "case-2.1";
        case CaseTag::Case22: return "case-2.2";
        case CaseTag::UnresolvedN2: return "unresolved-n2";
    }
    return "?";
}

VerifyResult verify_certificate(const EdgeColoring& c, const Certificate& cert, int n) {
    if (n < 1) return {false, "n must be positive"};
    if (static_cast<int>(cert.quads.size()) != n)
        return {false, "expected " + std::to_string(n) + " quads, found " +
                           std::to_string(cert.quads.size())};
    if (cert.support.universe() != c.order()) return {false, "support universe mismatch"};
    if (cert.support.empty()) return {false, "empty support"};
    VertexSet seen(c.order());
    for (const Quad& q : cert.quads) {
        for (int v : q) {
            if (v < 0 || v >= c.order()) return {false, "quad vertex out of range"};
            if (!cert.support.test(v)) return {false, "quad vertex outside support"};
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (q[i] == q[j]) return {false, "quad with repeated vertex"};
                if (c.color_of(q[i], q[j]) != cert.color) return {false, "non-monochromatic quad"};
            }
        for (int v : q) {
            if (seen.test(v)) return {false, "overlapping quads"};
            seen.set(v);
        }
    }
    if (!is_connected(c, cert.color, cert.support))
        return {false, "support not connected in certificate color"};
    return {true, ""};
}

namespace {

void sort_quads(std::vector<Quad>& quads) {
    for (Quad& q : quads) std::sort(q.begin(), q.end());
    std::sort(quads.begin(), quads.end());
}

[[noreturn]] void violation(const EdgeColoring& c, const std::string& stage,
                            const std::string& detail) {
    throw TheoremViolation(stage, detail, serialize_coloring(c));
}

// Ascending pool of vertices not yet consumed by the assembly.
class VertexPool {
public:
    explicit VertexPool(const VertexSet& s) : verts_(s.to_vector()) {}
    int take() {
        if (head_ >= verts_.size()) throw std::logic_error("vertex pool exhausted");
        return verts_[head_++];
    }

private:
    std::vector<int> verts_;
    size_t head_ = 0;
};

void require_budget(bool cond, const std::string& what) {
    if (!cond) throw InvalidInput("case budget invalid: " + what);
}

// The assembly relies on every cross-set edge being red, which holds
// exactly when the sets are unions of whole blue components.
void check_cross_edges_red(const EdgeColoring& c, const std::vector<VertexSet>& sets) {
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a + 1; b < sets.size(); ++b) {
            if (sets[a].intersects(sets[b]))
                throw InvalidInput("case budget invalid: sets overlap");
            for (int u = sets[a].first(); u >= 0; u = sets[a].next(u))
                if (c.blue_neighbors(u).intersects(sets[b]))
                    throw InvalidInput("case budget invalid: blue edge crosses sets");
        }
}

std::vector<std::pair<int, int>> red_matching_of_size(const EdgeColoring& c,
                                                      const VertexSet& within, int m,
                                                      const std::string& stage) {
    Matching full = max_matching(c, Color::Red, within);
    if (full.size() < m)
        violation(c, stage,
                  "red matching of size " + std::to_string(m) + " guaranteed, found only " +
                      std::to_string(full.size()));
    full.edges.resize(m);
    return full.edges;
}

}  // namespace

std::vector<Quad> assemble_red_quads(const EdgeColoring& c, const CaseBudget& b) {
    const int n = b.n;
    require_budget(n >= 2, "n must be >= 2");
    const int c4 = (n + 3) / 4;
    const size_t nsets = b.sets.size();
    require_budget(b.quad_counts.size() == nsets && b.uncovered_counts.size() == nsets,
                   "counts must align with sets");
    for (size_t i = 0; i < nsets; ++i) {
        require_budget(!b.sets[i].empty(), "empty set");
        require_budget(b.uncovered_counts[i] == b.sets[i].count() - 4 * b.quad_counts[i],
                       "uncovered count does not match set size");
    }
    check_cross_edges_red(c, b.sets);

    std::vector<Quad> quads;
    switch (b.tag) {
        case CaseTag::Case11: {
            require_budget(nsets == 3 && b.matching_targets.size() == 3, "case 1.1 shape");
            int total = 0;
            for (size_t i = 0; i < 3; ++i) {
                require_budget(b.quad_counts[i] >= c4 && b.quad_counts[i] <= n - 1,
                               "k_i outside [ceil(n/4), n-1]");
                require_budget(b.matching_targets[i] >= 0 &&
                                   b.matching_targets[i] <=
                                       guaranteed_red_matching(b.quad_counts[i],
                                                               b.uncovered_counts[i]),
                               "m_i exceeds the matching guarantee");
                total += b.matching_targets[i];
            }
            require_budget(total == n, "matching targets must sum to n");
            std::vector<std::vector<std::pair<int, int>>> edges(3);
            std::vector<VertexPool> pools;
            for (size_t i = 0; i < 3; ++i) {
                if (b.sets[i].count() < n + b.matching_targets[i])
                    violation(c, "case-1.1", "set budget |U_i| >= n+m_i violated");
                edges[i] = red_matching_of_size(c, b.sets[i], b.matching_targets[i], "case-1.1");
                VertexSet rest = b.sets[i];
                for (auto [x, y] : edges[i]) {
                    rest.reset(x);
                    rest.reset(y);
                }
                pools.emplace_back(rest);
            }
            for (size_t i = 0; i < 3; ++i)
                for (auto [x, y] : edges[i]) {
                    Quad q{x, y, 0, 0};
                    int slot = 2;
                    for (size_t j = 0; j < 3; ++j)
                        if (j != i) q[slot++] = pools[j].take();
                    std::sort(q.begin(), q.end());
                    quads.push_back(q);
                }
            break;
        }
        case CaseTag::Case12: {
            require_budget(nsets == 4 && b.matching_targets.size() == 3, "case 1.2 shape");
            const int m4 = b.sets[3].count();
            for (size_t i = 0; i < 3; ++i)
                require_budget(b.quad_counts[i] >= c4 && b.quad_counts[i] <= n - 1,
                               "k_i' outside [ceil(n/4), n-1]");
            if (m4 >= n) {
                // all-singleton shortcut: one vertex from each of the four sets
                int total = 0;
                for (int t : b.matching_targets) total += t;
                require_budget(total == 0, "shortcut expects no matchings");
                std::vector<VertexPool> pools;
                for (size_t i = 0; i < 4; ++i) {
                    if (b.sets[i].count() < n)
                        violation(c, "case-1.2", "set smaller than n in shortcut");
                    pools.emplace_back(b.sets[i]);
                }
                for (int j = 0; j < n; ++j) {
                    Quad q{pools[0].take(), pools[1].take(), pools[2].take(), pools[3].take()};
                    std::sort(q.begin(), q.end());
                    quads.push_back(q);
                }
                break;
            }
            int total = 0;
            for (size_t i = 0; i < 3; ++i) {
                require_budget(b.matching_targets[i] >= 0 &&
                                   b.matching_targets[i] <=
                                       guaranteed_red_matching(b.quad_counts[i],
                                                               b.uncovered_counts[i]),
                               "m_i exceeds the matching guarantee");
                total += b.matching_targets[i];
            }
            require_budget(total == n - m4, "matching targets must sum to n-|U4'|");
            std::vector<std::vector<std::pair<int, int>>> edges(3);
            std::vector<VertexPool> pools;
            for (size_t i = 0; i < 3; ++i) {
                if (b.sets[i].count() < n + b.matching_targets[i])
                    violation(c, "case-1.2", "set budget |U_i'| >= n+m_i violated");
                edges[i] = red_matching_of_size(c, b.sets[i], b.matching_targets[i], "case-1.2");
                VertexSet rest = b.sets[i];
                for (auto [x, y] : edges[i]) {
                    rest.reset(x);
                    rest.reset(y);
                }
                pools.emplace_back(rest);
            }
            // every U4' vertex anchors one all-cross quad
            for (int w = b.sets[3].first(); w >= 0; w = b.sets[3].next(w)) {
                Quad q{w, pools[0].take(), pools[1].take(), pools[2].take()};
                std::sort(q.begin(), q.end());
                quads.push_back(q);
            }
            for (size_t i = 0; i < 3; ++i)
                for (auto [x, y] : edges[i]) {
                    Quad q{x, y, 0, 0};
                    int slot = 2;
                    for (size_t j = 0; j < 3; ++j)
                        if (j != i) q[slot++] = pools[j].take();
                    std::sort(q.begin(), q.end());
                    quads.push_back(q);
                }
            break;
        }
        case CaseTag::Case21: {
            require_budget(nsets == 2, "case 2.1 shape");
            require_budget(b.quad_counts[0] >= n - 2 && b.quad_counts[1] >= n - 2,
                           "k_i >= n-2 required");
            if (b.sets[1].count() < n) violation(c, "case-2.1", "second set smaller than n");
            auto triangles = find_triangle_matching(c, Color::Red, b.sets[0], n);
            if (!triangles)
                violation(c, "case-2.1",
                          "red " + std::to_string(n) + "K3 guaranteed in U1, none found");
            VertexPool pool(b.sets[1]);
            for (const Triangle& t : *triangles) {
                Quad q{t[0], t[1], t[2], pool.take()};
                std::sort(q.begin(), q.end());
                quads.push_back(q);
            }
            break;
        }
        case CaseTag::Case22: {
            require_budget(nsets == 2 && b.matching_targets.size() == 2, "case 2.2 shape");
            require_budget(b.quad_counts[0] >= n - 2 && b.quad_counts[1] >= n - 2,
                           "k_i >= n-2 required");
            require_budget(b.matching_targets[0] == n && b.matching_targets[1] == n,
                           "case 2.2 pairs n edges with n edges");
            auto e1 = red_matching_of_size(c, b.sets[0], n, "case-2.2");
            auto e2 = red_matching_of_size(c, b.sets[1], n, "case-2.2");
            for (int i = 0; i < n; ++i) {
                Quad q{e1[i].first, e1[i].second, e2[i].first, e2[i].second};
                std::sort(q.begin(), q.end());
                quads.push_back(q);
            }
            break;
        }
        default:
            throw InvalidInput("case budget invalid: tag is not an assembly case");
    }
    return quads;
}

CaseSplit split_for_case_1_2(const std::array<std::vector<ComponentCount>, 3>& groups, int n) {
    if (n < 2) throw InvalidInput("split requires n >= 2");
    const int c4 = (n + 3) / 4;
    CaseSplit split;
    for (int gi = 0; gi < 3; ++gi) {
        std::vector<ComponentCount> sorted = groups[gi];
        long long total = 0;
        for (const auto& cc : sorted) {
            if (cc.count > n - 1) throw InvalidInput("component count above n-1");
            total += cc.count;
        }
        if (total < c4) throw InvalidInput("group quad count below ceil(n/4)");
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const ComponentCount& a, const ComponentCount& b) {
                             if (a.count != b.count) return a.count > b.count;
                             return a.vertices.first() < b.vertices.first();
                         });
        int taken = 0;
        size_t i = 0;
        for (; i < sorted.size() && taken < c4; ++i) {
            split.sets[gi].push_back(sorted[i]);
            taken += sorted[i].count;
        }
        if (taken < c4 || taken > n - 1)
            throw std::logic_error("case 1.2 split missed [ceil(n/4), n-1]");
        for (; i < sorted.size(); ++i) split.sets[3].push_back(sorted[i]);
    }
    return split;
}

namespace {

VertexSet union_of(const std::vector<ComponentCount>& comps, int universe) {
    VertexSet u(universe);
    for (const auto& cc : comps) u |= cc.vertices;
    return u;
}

int count_sum(const std::vector<ComponentCount>& comps) {
    int s = 0;
    for (const auto& cc : comps) s += cc.count;
    return s;
}

// m_i = min(remaining demand, f(k_i, u_i)) in ascending set order.
std::vector<int> water_fill(const std::vector<int>& ks, const std::vector<int>& us,
                            int demand) {
    std::vector<int> m(ks.size(), 0);
    for (size_t i = 0; i < ks.size() && demand > 0; ++i) {
        m[i] = std::min(demand, guaranteed_red_matching(ks[i], us[i]));
        demand -= m[i];
    }
    if (demand != 0) throw std::logic_error("water fill ran out of guaranteed matchings");
    return m;
}

Certificate red_certificate(const EdgeColoring& c, std::vector<Quad> quads, int n) {
    if (static_cast<int>(quads.size()) != n)
        throw std::logic_error("case assembly produced wrong quad count");
    sort_quads(quads);
    return Certificate{Color::Red, c.all_vertices(), std::move(quads)};
}

}  // namespace

ExtractOutcome extract_via_cases(const EdgeColoring& c, int n, const SearchBudget& budget) {
    if (n < 2) throw InvalidInput("case analysis requires n >= 2");
    if (c.order() != 13 * n - 3) throw InvalidInput("case analysis requires order 13n-3");
    if (components(c, Color::Red).components.size() != 1)
        throw InvalidInput("case analysis requires the red class connected");

    auto decomp = components(c, Color::Blue);
    std::vector<ComponentCount> comps;
    long long k = 0;
    for (const VertexSet& comp : decomp.components) {
        int cnt = max_k4_packing(c, Color::Blue, comp, budget).size();
        if (cnt >= n)
            throw InvalidInput("a blue component already packs n quads; take the blue certificate");
        comps.push_back({comp, cnt});
        k += cnt;
    }
    const long long k_lower = 2LL * n - 3 + (n - 1) / 4;
    if (k < k_lower)
        violation(c, "packing-count",
                  "max blue packing k=" + std::to_string(k) + " below guaranteed " +
                      std::to_string(k_lower) + " for n=" + std::to_string(n));

    std::vector<ComponentCount> bearing, quad_free;
    for (const auto& cc : comps)
        (cc.count > 0 ? bearing : quad_free).push_back(cc);
    const int t = static_cast<int>(bearing.size());
    if (t < 2) {
        if (n == 2 && k == 1) {
            Unresolved u{"single blue quad on 23 vertices: the branch conditional on "
                         "R_2(2K_4) <= 23; no certificate attempted",
                         c, n, static_cast<int>(k), t};
            return ExtractOutcome{CaseTag::UnresolvedN2, std::nullopt, std::move(u)};
        }
        violation(c, "t>=2", "only one blue component carries quads (t=" + std::to_string(t) +
                                 ", k=" + std::to_string(k) + ")");
    }

    std::stable_sort(bearing.begin(), bearing.end(),
                     [](const ComponentCount& a, const ComponentCount& b) {
                         if (a.count != b.count) return a.count > b.count;
                         return a.vertices.first() < b.vertices.first();
                     });
    PartitionInput pin{n, {}};
    for (const auto& cc : bearing) pin.parts.push_back(cc.count);
    PartitionGrouping grouping = combine(pin);

    std::vector<std::vector<ComponentCount>> groups(grouping.groups.size());
    for (size_t gi = 0; gi < grouping.groups.size(); ++gi)
        for (int idx : grouping.groups[gi]) groups[gi].push_back(bearing[idx]);
    // quad-free components join the first group; the guard arithmetic is
    // placement-independent
    for (const auto& cc : quad_free) groups[0].push_back(cc);

    const int order = c.order();
    const int c4 = (n + 3) / 4;

    if (grouping.kind == GroupingKind::Three) {
        std::vector<VertexSet> sets;
        std::vector<int> ks, us;
        for (auto& g : groups) {
            VertexSet u = union_of(g, order);
            ks.push_back(count_sum(g));
            us.push_back(u.count() - 4 * ks.back());
            sets.push_back(std::move(u));
        }
        bool oversized = false;
        for (int ki : ks)
            if (ki > n - 1) oversized = true;

        if (!oversized) {
            // Case 1.1
            long long guarantee = 0;
            for (size_t i = 0; i < 3; ++i) guarantee += guaranteed_red_matching(ks[i], us[i]);
            if (guarantee < n)
                violation(c, "case-1.1 guard",
                          "sum of matching guarantees " + std::to_string(guarantee) +
                              " below n=" + std::to_string(n));
            CaseBudget b{CaseTag::Case11, n, sets, ks, us, water_fill(ks, us, n), 0};
            return ExtractOutcome{CaseTag::Case11,
                                  red_certificate(c, assemble_red_quads(c, b), n),
                                  std::nullopt};
        }

        // Case 1.2: re-split at whole-component granularity
        std::array<std::vector<ComponentCount>, 3> as_array{groups[0], groups[1], groups[2]};
        CaseSplit split = split_for_case_1_2(as_array, n);
        std::vector<VertexSet> psets;
        std::vector<int> pks, pus;
        for (int i = 0; i < 4; ++i) {
            VertexSet u = union_of(split.sets[i], order);
            pks.push_back(count_sum(split.sets[i]));
            pus.push_back(u.count() - 4 * pks.back());
            psets.push_back(std::move(u));
        }
        const int m4 = psets[3].count();
        if (m4 < 1) violation(c, "case-1.2", "U4' empty although some k_i > n-1");
        for (int i = 0; i < 3; ++i)
            if (psets[i].count() < n)
                violation(c, "case-1.2", "|U_i'| < n despite k_i' >= ceil(n/4)");
        if (m4 >= n) {
            CaseBudget b{CaseTag::Case12, n, psets, pks, pus, {0, 0, 0},
                         static_cast<int>(order - 4 * k - pus[3])};
            return ExtractOutcome{CaseTag::Case12,
                                  red_certificate(c, assemble_red_quads(c, b), n),
                                  std::nullopt};
        }
        const int n_prime = static_cast<int>(order - 4 * k - pus[3]);
        if (n_prime < n - m4 + 9)
            violation(c, "case-1.2 guard",
                      "n' = " + std::to_string(n_prime) + " below n-|U4'|+9");
        long long guarantee = 0;
        for (int i = 0; i < 3; ++i) guarantee += guaranteed_red_matching(pks[i], pus[i]);
        if (guarantee < n - m4)
            violation(c, "case-1.2 guard",
                      "sum of matching guarantees " + std::to_string(guarantee) +
                          " below n-|U4'|=" + std::to_string(n - m4));
        std::vector<int> ks3{pks[0], pks[1], pks[2]}, us3{pus[0], pus[1], pus[2]};
        CaseBudget b{CaseTag::Case12, n, psets, pks, pus, water_fill(ks3, us3, n - m4),
                     n_prime};
        return ExtractOutcome{CaseTag::Case12, red_certificate(c, assemble_red_quads(c, b), n),
                              std::nullopt};
    }

    // Two parts: Case 2
    if (k > 2LL * n - 3 + c4)
        violation(c, "case-2 entry",
                  "two-part grouping although k=" + std::to_string(k) + " > 2n-3+ceil(n/4)");
    std::vector<VertexSet> sets;
    std::vector<int> ks, us;
    for (auto& g : groups) {
        VertexSet u = union_of(g, order);
        ks.push_back(count_sum(g));
        us.push_back(u.count() - 4 * ks.back());
        sets.push_back(std::move(u));
    }
    if (us[0] < us[1]) {
        std::swap(sets[0], sets[1]);
        std::swap(ks[0], ks[1]);
        std::swap(us[0], us[1]);
    }
    if (us[0] + us[1] != order - 4 * k || us[0] + us[1] < 4 * n + 6)
        violation(c, "case-2 guard",
                  "u1+u2 = " + std::to_string(us[0] + us[1]) + " below 4n+6");
    if (us[0] < 2 * n + 3)
        violation(c, "case-2 guard", "u1 = " + std::to_string(us[0]) + " below 2n+3");

    if (us[0] >= 2 * n + 6) {
        // Case 2.1: red nK3 in U1 by the triangles-vs-quads guarantee
        const int needed = ramsey_triangles_quads(n, ks[0]);
        if (sets[0].count() < needed)
            violation(c, "case-2.1 guard",
                      "|U1| = " + std::to_string(sets[0].count()) + " below R(nK3,(k1+1)K4) = " +
                          std::to_string(needed));
        CaseBudget b{CaseTag::Case21, n, sets, ks, us, {}, 0};
        return ExtractOutcome{CaseTag::Case21, red_certificate(c, assemble_red_quads(c, b), n),
                              std::nullopt};
    }
    // Case 2.2: 2n+3 <= u1 <= 2n+5
    if (us[1] < 2 * n + 1)
        violation(c, "case-2.2 guard", "u2 = " + std::to_string(us[1]) + " below 2n+1");
    for (int i = 0; i < 2; ++i)
        if (guaranteed_red_matching(ks[i], us[i]) < n)
            violation(c, "case-2.2 guard",
                      "f(k" + std::to_string(i + 1) + ",u" + std::to_string(i + 1) +
                          ") below n");
    CaseBudget b{CaseTag::Case22, n, sets, ks, us, {n, n}, 0};
    return ExtractOutcome{CaseTag::Case22, red_certificate(c, assemble_red_quads(c, b), n),
                          std::nullopt};
}

ExtractOutcome extract(const EdgeColoring& input, int n, const SearchBudget& budget) {
    if (n < 2) throw InvalidInput("extraction requires n >= 2 (the formula starts at n=2)");
    if (input.order() != 13 * n - 3)
        throw InvalidInput("extraction requires order exactly 13n-3 = " +
                           std::to_string(13 * n - 3) + ", got " +
                           std::to_string(input.order()) + " (restrict with --subset)");

    const bool swapped = connected_color(input) == Color::Blue;
    EdgeColoring work = swapped ? input.swapped() : input;
    auto unswap = [&](Certificate cert) {
        if (swapped) cert.color = other(cert.color);
        return cert;
    };

    // (2) n disjoint red quads anywhere: red is connected, so the whole
    // vertex set supports the certificate
    if (auto quads = find_k4_packing(work, Color::Red, work.all_vertices(), n, budget)) {
        quads->resize(n);
        sort_quads(*quads);
        return ExtractOutcome{
            CaseTag::ConnectedPacking,
            unswap(Certificate{Color::Red, work.all_vertices(), std::move(*quads)}),
            std::nullopt};
    }

    // (3) some blue component packs n quads
    for (const VertexSet& comp : components(work, Color::Blue).components) {
        if (comp.count() < 4 * n) continue;
        if (auto quads = find_k4_packing(work, Color::Blue, comp, n, budget)) {
            quads->resize(n);
            sort_quads(*quads);
            return ExtractOutcome{CaseTag::ComponentPacking,
                                  unswap(Certificate{Color::Blue, comp, std::move(*quads)}),
                                  std::nullopt};
        }
    }

    // (4) the case analysis; reachable only when the early exits both fail
    ExtractOutcome outcome = extract_via_cases(work, n, budget);
    if (outcome.certificate) outcome.certificate = unswap(std::move(*outcome.certificate));
    if (outcome.unresolved) outcome.unresolved->coloring = input;
    return outcome;
}

// --- certificate text format ---

std::string serialize_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "certificate v1\n";
    out << "color " << color_name(cert.color) << "\n";
    out << "n " << cert.quads.size() << "\n";
    out << "support";
    for (int v = cert.support.first(); v >= 0; v = cert.support.next(v)) out << " " << v + 1;
    out << "\n";
    for (const Quad& q : cert.quads) {
        Quad s = q;
        std::sort(s.begin(), s.end());
        out << "quad " << s[0] + 1 << " " << s[1] + 1 << " " << s[2] + 1 << " " << s[3] + 1
            << "\n";
    }
    return out.str();
}

Certificate parse_certificate(const std::string& text, int coloring_order) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_header = false, saw_color = false, saw_support = false;
    std::optional<long long> declared_n;
    Certificate cert{Color::Red, VertexSet(coloring_order), {}};

    auto check_vertex = [&](long long v) {
        if (v < 1 || v > coloring_order)
            throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 1.." +
                                          std::to_string(coloring_order));
        return static_cast<int>(v) - 1;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream iss(raw);
        std::string tag;
        if (!(iss >> tag)) continue;
        if (tag[0] == '#') continue;
        if (!saw_header) {
            std::string version;
            if (tag != "certificate" || !(iss >> version))
                throw ParseError(line_no, "expected header \"certificate v1\"");
            saw_header = true;
            continue;
        }
        if (tag == "color") {
            std::string name;
            if (!(iss >> name) || (name != "red" && name != "blue"))
                throw ParseError(line_no, "color must be red or blue");
            cert.color = name == "red" ? Color::Red : Color::Blue;
            saw_color = true;
        } else if (tag == "n") {
            long long v;
            if (!(iss >> v) || v < 1) throw ParseError(line_no, "n must be a positive integer");
            declared_n = v;
        } else if (tag == "support") {
            long long v;
            while (iss >> v) cert.support.set(check_vertex(v));
            saw_support = true;
        } else if (tag == "quad") {
            Quad q;
            long long v;
            for (int i = 0; i < 4; ++i) {
                if (!(iss >> v)) throw ParseError(line_no, "quad needs exactly 4 vertices");
                q[i] = check_vertex(v);
            }
            if (iss >> v) throw ParseError(line_no, "quad needs exactly 4 vertices");
            cert.quads.push_back(q);
        } else {
            throw ParseError(line_no, "unknown field \"" + tag + "\"");
        }
    }
    if (!saw_header) throw ParseError(1, "expected header \"certificate v1\"");
    if (!saw_color) throw ParseError(line_no, "missing color field");
    if (!saw_support) throw ParseError(line_no, "missing support field");
    if (cert.quads.empty()) throw ParseError(line_no, "missing quad fields");
    if (declared_n && *declared_n != static_cast<long long>(cert.quads.size()))
        throw ParseError(line_no, "declared n does not match the number of quads");
    return cert;
}

}  // namespace ccm
