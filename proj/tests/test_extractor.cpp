#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ccm/errors.hpp"
#include "ccm/extractor.hpp"
#include "ccm/extremal.hpp"
#include "ccm/rng.hpp"

using namespace ccm;

namespace {

EdgeColoring uniform(int order, Color color) {
    EdgeColoring c(order);
    if (color == Color::Red)
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v) c.set_color(u, v, Color::Red);
    return c;
}

// one extra vertex joined to every existing vertex in `join`
EdgeColoring extend_by_one(const EdgeColoring& c, Color join) {
    EdgeColoring out(c.order() + 1);
    for (int u = 0; u < c.order(); ++u) {
        for (int v = u + 1; v < c.order(); ++v) out.set_color(u, v, c.color_of(u, v));
        out.set_color(u, c.order(), join);
    }
    return out;
}

// Component builders for the case exercisers. Inside [start, start+size):
// a blue clique on the first `clique` vertices, then pendants each attached
// by one blue edge to a distinct clique vertex; everything else red.
void add_blue_clique_with_pendants(EdgeColoring& c, int start, int clique, int pendants) {
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j) c.set_color(start + i, start + j, Color::Blue);
    int size = clique + pendants;
    for (int p = 0; p < pendants; ++p) {
        int pv = start + clique + p;
        for (int q = start; q < start + size; ++q)
            if (q != pv) c.set_color(std::min(pv, q), std::max(pv, q), Color::Red);
        c.set_color(start + p, pv, Color::Blue);
    }
}

EdgeColoring all_red_base(int order) { return uniform(order, Color::Red); }

VertexSet range_set(int order, int start, int size) {
    VertexSet s(order);
    for (int v = start; v < start + size; ++v) s.set(v);
    return s;
}

void check_red_quads(const EdgeColoring& c, const std::vector<Quad>& quads, int n) {
    REQUIRE(static_cast<int>(quads.size()) == n);
    VertexSet seen(c.order());
    for (const Quad& q : quads) {
        for (int v : q) {
            CHECK_FALSE(seen.test(v));
            seen.set(v);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) CHECK(c.color_of(q[i], q[j]) == Color::Red);
    }
}

}  // namespace

TEST_CASE("extract on uniform colorings") {
    EdgeColoring all_red = uniform(36, Color::Red);
    ExtractOutcome red = extract(all_red, 3);
    REQUIRE(red.ok());
    CHECK(red.tag == CaseTag::ConnectedPacking);
    CHECK(red.certificate->color == Color::Red);
    CHECK(red.certificate->support.count() == 36);
    CHECK(verify_certificate(all_red, *red.certificate, 3).ok);

    EdgeColoring all_blue(36);
    ExtractOutcome blue = extract(all_blue, 3);
    REQUIRE(blue.ok());
    CHECK(blue.certificate->color == Color::Blue);
    CHECK(verify_certificate(all_blue, *blue.certificate, 3).ok);
}

TEST_CASE("extract rejects wrong order and n out of range") {
    CHECK_THROWS_AS(extract(uniform(35, Color::Red), 3), InvalidInput);
    CHECK_THROWS_AS(extract(uniform(36, Color::Red), 1), InvalidInput);
}

TEST_CASE("extract + verify on seeded random colorings") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        double p = 0.1 + 0.2 * (seed % 5);
        EdgeColoring c = random_coloring(36, p, derive_seed(0xE0, seed));
        ExtractOutcome outcome = extract(c, 3);
        REQUIRE(outcome.ok());
        VerifyResult res = verify_certificate(c, *outcome.certificate, 3);
        CHECK_MESSAGE(res.ok, res.reason);
    }
}

TEST_CASE("verify_certificate rejects each invariant violation") {
    EdgeColoring c = uniform(36, Color::Red);
    ExtractOutcome outcome = extract(c, 3);
    REQUIRE(outcome.ok());
    Certificate good = *outcome.certificate;

    SUBCASE("wrong quad count") {
        Certificate bad = good;
        bad.quads.pop_back();
        CHECK_FALSE(verify_certificate(c, bad, 3).ok);
    }
    SUBCASE("non-monochromatic quad") {
        EdgeColoring tampered = c;
        tampered.set_color(good.quads[0][0], good.quads[0][1], Color::Blue);
        VerifyResult res = verify_certificate(tampered, good, 3);
        CHECK_FALSE(res.ok);
        CHECK(res.reason == "non-monochromatic quad");
    }
    SUBCASE("quad outside support") {
        Certificate bad = good;
        bad.support = range_set(36, 0, 11);  // drops one vertex of the third quad
        CHECK_FALSE(verify_certificate(c, bad, 3).ok);
    }
    SUBCASE("overlapping quads") {
        Certificate bad = good;
        bad.quads[1] = bad.quads[0];
        CHECK_FALSE(verify_certificate(c, bad, 3).ok);
    }
    SUBCASE("disconnected support") {
        // red = two disjoint K18 cliques, blue in between
        EdgeColoring split(36);
        for (int u = 0; u < 36; ++u)
            for (int v = u + 1; v < 36; ++v)
                if ((u < 18) == (v < 18)) split.set_color(u, v, Color::Red);
        Certificate cert{Color::Red, split.all_vertices(),
                         {Quad{0, 1, 2, 3}, Quad{4, 5, 6, 7}, Quad{18, 19, 20, 21}}};
        VerifyResult res = verify_certificate(split, cert, 3);
        CHECK_FALSE(res.ok);
        CHECK(res.reason == "support not connected in certificate color");
    }
}

TEST_CASE("verifier soundness: flipping any single in-quad edge flips the verdict") {
    EdgeColoring c = random_coloring(36, 0.5, 4242);
    ExtractOutcome outcome = extract(c, 3);
    REQUIRE(outcome.ok());
    const Certificate& cert = *outcome.certificate;
    REQUIRE(verify_certificate(c, cert, 3).ok);
    for (const Quad& q : cert.quads)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                EdgeColoring mutated = c;
                mutated.set_color(q[i], q[j], other(cert.color));
                CHECK_FALSE(verify_certificate(mutated, cert, 3).ok);
            }
}

TEST_CASE("case 1.1 via the internal engine: extremal(3) plus a red vertex") {
    EdgeColoring c = extend_by_one(build_extremal(3), Color::Red);
    REQUIRE(c.order() == 36);
    ExtractOutcome outcome = extract_via_cases(c, 3);
    REQUIRE(outcome.ok());
    CHECK(outcome.tag == CaseTag::Case11);
    CHECK(outcome.certificate->color == Color::Red);
    check_red_quads(c, outcome.certificate->quads, 3);
    CHECK(verify_certificate(c, *outcome.certificate, 3).ok);

    // the public pipeline exits earlier on the same coloring
    ExtractOutcome direct = extract(c, 3);
    REQUIRE(direct.ok());
    CHECK(direct.tag == CaseTag::ConnectedPacking);
    CHECK(verify_certificate(c, *direct.certificate, 3).ok);
}

TEST_CASE("case 2.2 via the internal engine: two heavy components") {
    // two blue components: K11 plus 7 pendants each (18 vertices); u = (10,10)
    EdgeColoring c = all_red_base(36);
    add_blue_clique_with_pendants(c, 0, 11, 7);
    add_blue_clique_with_pendants(c, 18, 11, 7);
    ExtractOutcome outcome = extract_via_cases(c, 3);
    REQUIRE(outcome.ok());
    CHECK(outcome.tag == CaseTag::Case22);
    check_red_quads(c, outcome.certificate->quads, 3);
    CHECK(verify_certificate(c, *outcome.certificate, 3).ok);
    // each quad takes one red edge from each side
    for (const Quad& q : outcome.certificate->quads) {
        int left = 0;
        for (int v : q) left += v < 18;
        CHECK(left == 2);
    }
}

TEST_CASE("case 2.1 via the internal engine: lopsided uncovered counts") {
    // u_1 = 12 >= 2n+6 forces the triangle route
    EdgeColoring c = all_red_base(36);
    add_blue_clique_with_pendants(c, 0, 11, 9);   // 20 vertices, u = 12
    add_blue_clique_with_pendants(c, 20, 11, 5);  // 16 vertices, u = 8
    ExtractOutcome outcome = extract_via_cases(c, 3);
    REQUIRE(outcome.ok());
    CHECK(outcome.tag == CaseTag::Case21);
    check_red_quads(c, outcome.certificate->quads, 3);
    CHECK(verify_certificate(c, *outcome.certificate, 3).ok);
    // each quad: a triangle in the first component plus one vertex across
    for (const Quad& q : outcome.certificate->quads) {
        int left = 0;
        for (int v : q) left += v < 20;
        CHECK(left == 3);
    }
}

TEST_CASE("case 1.2 shortcut via the internal engine: |U4'| >= n") {
    // four blue K8 blocks (two quads each) + four blue-isolated vertices
    EdgeColoring c = all_red_base(36);
    for (int b = 0; b < 4; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                c.set_color(8 * b + i, 8 * b + j, Color::Blue);
    ExtractOutcome outcome = extract_via_cases(c, 3);
    REQUIRE(outcome.ok());
    CHECK(outcome.tag == CaseTag::Case12);
    check_red_quads(c, outcome.certificate->quads, 3);
    CHECK(verify_certificate(c, *outcome.certificate, 3).ok);
}

TEST_CASE("case 1.2 non-shortcut via the internal engine (n=5): |U4'| < n") {
    // three count-4 components and one K4 block; order 62 = 13*5-3
    EdgeColoring c = all_red_base(62);
    add_blue_clique_with_pendants(c, 0, 19, 0);    // u = 3
    add_blue_clique_with_pendants(c, 19, 19, 0);   // u = 3
    add_blue_clique_with_pendants(c, 38, 19, 1);   // 20 vertices, u = 4
    add_blue_clique_with_pendants(c, 58, 4, 0);    // the leftover K4 -> U4'
    ExtractOutcome outcome = extract_via_cases(c, 5);
    REQUIRE(outcome.ok());
    CHECK(outcome.tag == CaseTag::Case12);
    check_red_quads(c, outcome.certificate->quads, 5);
    CHECK(verify_certificate(c, *outcome.certificate, 5).ok);
    // exactly four quads consume the K4-block vertices, one per quad
    int quads_using_block = 0;
    for (const Quad& q : outcome.certificate->quads) {
        int inside = 0;
        for (int v : q) inside += v >= 58;
        CHECK(inside <= 1);
        quads_using_block += inside;
    }
    CHECK(quads_using_block == 4);
}

TEST_CASE("n=2 with k >= 2 still resolves through the case machinery") {
    SUBCASE("two blue quads: case 2.1") {
        EdgeColoring c = all_red_base(23);
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    c.set_color(4 * b + i, 4 * b + j, Color::Blue);
        ExtractOutcome outcome = extract_via_cases(c, 2);
        REQUIRE(outcome.ok());
        CHECK(outcome.tag == CaseTag::Case21);
        check_red_quads(c, outcome.certificate->quads, 2);
        CHECK(verify_certificate(c, *outcome.certificate, 2).ok);
    }
    SUBCASE("three blue quads: case 1.1") {
        EdgeColoring c = all_red_base(23);
        for (int b = 0; b < 3; ++b)
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    c.set_color(4 * b + i, 4 * b + j, Color::Blue);
        ExtractOutcome outcome = extract_via_cases(c, 2);
        REQUIRE(outcome.ok());
        CHECK(outcome.tag == CaseTag::Case11);
        check_red_quads(c, outcome.certificate->quads, 2);
        CHECK(verify_certificate(c, *outcome.certificate, 2).ok);
    }
}

TEST_CASE("n=2 with a single blue quad is the unresolved branch") {
    EdgeColoring c = all_red_base(23);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) c.set_color(i, j, Color::Blue);
    ExtractOutcome outcome = extract_via_cases(c, 2);
    CHECK_FALSE(outcome.ok());
    CHECK(outcome.tag == CaseTag::UnresolvedN2);
    REQUIRE(outcome.unresolved.has_value());
    CHECK(outcome.unresolved->k == 1);
    CHECK(outcome.unresolved->t == 1);
    CHECK(outcome.unresolved->coloring.order() == 23);
}

TEST_CASE("packing-count guard raises TheoremViolation when k is impossible") {
    // one blue K8 among singletons: k = 2 < 2n-3 = 3 for n=3
    EdgeColoring c = all_red_base(36);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) c.set_color(i, j, Color::Blue);
    CHECK_THROWS_AS(extract_via_cases(c, 3), TheoremViolation);
}

TEST_CASE("internal engine rejects inputs the pipeline would have settled") {
    EdgeColoring all_blue(36);  // red class disconnected
    CHECK_THROWS_AS(extract_via_cases(all_blue, 3), InvalidInput);

    EdgeColoring packed = all_red_base(36);  // one blue component already packs n
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) packed.set_color(i, j, Color::Blue);
    CHECK_THROWS_AS(extract_via_cases(packed, 3), InvalidInput);
}

TEST_CASE("assemble_red_quads: case 2.2 pairs the i-th edges across the sets") {
    // two components per set: a blue K4 plus red-only singletons
    EdgeColoring c = all_red_base(22);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            c.set_color(i, j, Color::Blue);
            c.set_color(11 + i, 11 + j, Color::Blue);
        }
    CaseBudget b;
    b.tag = CaseTag::Case22;
    b.n = 3;
    b.sets = {range_set(22, 0, 11), range_set(22, 11, 11)};
    b.quad_counts = {1, 1};
    b.uncovered_counts = {7, 7};
    b.matching_targets = {3, 3};
    std::vector<Quad> quads = assemble_red_quads(c, b);
    check_red_quads(c, quads, 3);
    Matching left = max_matching(c, Color::Red, b.sets[0]);
    Matching right = max_matching(c, Color::Red, b.sets[1]);
    for (int i = 0; i < 3; ++i) {
        Quad expect{left.edges[i].first, left.edges[i].second, right.edges[i].first,
                    right.edges[i].second};
        std::sort(expect.begin(), expect.end());
        CHECK(quads[i] == expect);
    }
}

TEST_CASE("assemble_red_quads: case 2.1 joins triangles with distinct vertices") {
    EdgeColoring c = all_red_base(20);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            c.set_color(i, j, Color::Blue);
            c.set_color(13 + i, 13 + j, Color::Blue);
        }
    CaseBudget b;
    b.tag = CaseTag::Case21;
    b.n = 3;
    b.sets = {range_set(20, 0, 13), range_set(20, 13, 7)};
    b.quad_counts = {1, 1};
    b.uncovered_counts = {9, 3};
    std::vector<Quad> quads = assemble_red_quads(c, b);
    check_red_quads(c, quads, 3);
    for (const Quad& q : quads) {
        int right = 0;
        for (int v : q) right += v >= 13;
        CHECK(right == 1);
    }
}

TEST_CASE("assemble_red_quads: case 1.2 with a one-vertex U4'") {
    // three components shaped blue-K9(+pendants) and one lone vertex
    EdgeColoring c = all_red_base(42);
    add_blue_clique_with_pendants(c, 0, 9, 7);    // 16 vertices, k=2, u=8
    add_blue_clique_with_pendants(c, 16, 9, 7);   // 16 vertices, k=2, u=8
    add_blue_clique_with_pendants(c, 32, 9, 0);   // 9 vertices, k=2, u=1
    CaseBudget b;
    b.tag = CaseTag::Case12;
    b.n = 5;
    b.sets = {range_set(42, 0, 16), range_set(42, 16, 16), range_set(42, 32, 9),
              range_set(42, 41, 1)};
    b.quad_counts = {2, 2, 2, 0};
    b.uncovered_counts = {8, 8, 1, 1};
    b.matching_targets = {2, 2, 0};
    std::vector<Quad> quads = assemble_red_quads(c, b);
    check_red_quads(c, quads, 5);
    int using_lone = 0;
    for (const Quad& q : quads)
        for (int v : q) using_lone += v == 41;
    CHECK(using_lone == 1);  // exactly one quad consumes the U4' vertex
}

TEST_CASE("assemble_red_quads validates its budget") {
    EdgeColoring c = all_red_base(22);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            c.set_color(i, j, Color::Blue);
            c.set_color(11 + i, 11 + j, Color::Blue);
        }
    CaseBudget b;
    b.tag = CaseTag::Case22;
    b.n = 3;
    b.sets = {range_set(22, 0, 11), range_set(22, 11, 11)};
    b.quad_counts = {1, 1};
    b.uncovered_counts = {7, 7};
    b.matching_targets = {3, 3};

    SUBCASE("overlapping sets") {
        b.sets[1] = range_set(22, 8, 14);
        CHECK_THROWS_AS(assemble_red_quads(c, b), InvalidInput);
    }
    SUBCASE("blue edge across sets") {
        EdgeColoring bad = c;
        bad.set_color(0, 11, Color::Blue);
        CHECK_THROWS_AS(assemble_red_quads(bad, b), InvalidInput);
    }
    SUBCASE("inconsistent uncovered count") {
        b.uncovered_counts[0] = 6;
        CHECK_THROWS_AS(assemble_red_quads(c, b), InvalidInput);
    }
    SUBCASE("quad count below n-2") {
        b.quad_counts = {0, 1};
        b.uncovered_counts = {11, 7};
        CHECK_THROWS_AS(assemble_red_quads(c, b), InvalidInput);
    }
}

TEST_CASE("split_for_case_1_2: threshold behavior and the bracket property") {
    auto comp = [](int order, int start, int size, int count) {
        return ComponentCount{range_set(order, start, size), count};
    };
    SUBCASE("a single component at or above the threshold is taken alone") {
        std::array<std::vector<ComponentCount>, 3> groups{
            std::vector<ComponentCount>{comp(60, 0, 12, 3), comp(60, 12, 12, 3)},
            std::vector<ComponentCount>{comp(60, 24, 12, 3)},
            std::vector<ComponentCount>{comp(60, 36, 12, 3)}};
        CaseSplit s = split_for_case_1_2(groups, 4);
        CHECK(s.sets[0].size() == 1);
        CHECK(s.sets[0][0].count == 3);
        CHECK(s.sets[3].size() == 1);  // the second count-3 component moved to U4'
    }
    SUBCASE("sub-threshold components accumulate to ceil(n/4)") {
        std::array<std::vector<ComponentCount>, 3> groups;
        int start = 0;
        for (int g = 0; g < 3; ++g)
            for (int i = 0; i < 8; ++i) {
                groups[g].push_back(comp(200, start, 5, 1));
                start += 5;
            }
        CaseSplit s = split_for_case_1_2(groups, 8);  // ceil(8/4) = 2
        for (int g = 0; g < 3; ++g) {
            int sum = 0;
            for (const auto& cc : s.sets[g]) sum += cc.count;
            CHECK(sum == 2);
        }
    }
    SUBCASE("randomized bracket property") {
        SplitMix64 rng(0x5117);
        for (int iter = 0; iter < 10000; ++iter) {
            int n = 2 + static_cast<int>(rng.next() % 11);
            int c4 = (n + 3) / 4;
            std::array<std::vector<ComponentCount>, 3> groups;
            int start = 0;
            for (int g = 0; g < 3; ++g) {
                int sum = 0;
                while (sum < c4) {
                    int count = 1 + static_cast<int>(rng.next() % (n - 1));
                    int size = 4 * count + static_cast<int>(rng.next() % 4);
                    groups[g].push_back(comp(4096, start, size, count));
                    start += size;
                    sum += count;
                }
            }
            CaseSplit s = split_for_case_1_2(groups, n);
            for (int g = 0; g < 3; ++g) {
                int sum = 0;
                for (const auto& cc : s.sets[g]) sum += cc.count;
                CHECK(sum >= c4);
                CHECK(sum <= n - 1);
            }
        }
    }
}

TEST_CASE("certificate text round-trips and accepts hand-written files") {
    EdgeColoring c = uniform(36, Color::Red);
    ExtractOutcome outcome = extract(c, 3);
    REQUIRE(outcome.ok());
    std::string text = serialize_certificate(*outcome.certificate);
    Certificate parsed = parse_certificate(text, 36);
    CHECK(parsed.color == outcome.certificate->color);
    CHECK(parsed.support == outcome.certificate->support);
    CHECK(parsed.quads == outcome.certificate->quads);

    std::string handwritten =
        "certificate v1\n"
        "# hand-written\n"
        "color red\n"
        "support 1 2 3 4 5 6 7 8 9 10 11 12\n"
        "quad 1 2 3 4\n"
        "quad 5 6 7 8\n"
        "quad 9 10 11 12\n";
    EdgeColoring small = uniform(12, Color::Red);
    Certificate hand = parse_certificate(handwritten, 12);
    CHECK(verify_certificate(small, hand, 3).ok);

    CHECK_THROWS_AS(parse_certificate("color red\n", 12), ParseError);
    CHECK_THROWS_AS(parse_certificate("certificate v1\ncolor red\nn 2\nsupport 1 2 3 4\nquad 1 2 3 4\n", 12),
                    ParseError);  // declared n mismatch
    CHECK_THROWS_AS(parse_certificate("certificate v1\ncolor red\nsupport 1 99\nquad 1 2 3 4\n", 12),
                    ParseError);  // out of range
}

TEST_CASE("sharpness: extremal plus one vertex yields a certificate either way") {
    for (int n : {3, 4}) {
        for (Color join : {Color::Red, Color::Blue}) {
            EdgeColoring c = extend_by_one(build_extremal(n), join);
            REQUIRE(c.order() == 13 * n - 3);
            ExtractOutcome outcome = extract(c, n);
            REQUIRE(outcome.ok());
            VerifyResult res = verify_certificate(c, *outcome.certificate, n);
            CHECK_MESSAGE(res.ok, res.reason);
        }
    }
}
