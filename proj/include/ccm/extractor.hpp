#ifndef CCM_EXTRACTOR_HPP
#define CCM_EXTRACTOR_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccm/coloring.hpp"
#include "ccm/kernels.hpp"

namespace ccm {

/// Which exit of the extraction pipeline produced the result.
enum class CaseTag {
    ConnectedPacking,  // n disjoint quads in the connected color class
    ComponentPacking,  // one component of the other color holds n quads
    Case11,
    Case12,
    Case21,
    Case22,
    UnresolvedN2,
};

const char* case_tag_name(CaseTag tag);

/// Witness that the coloring contains a monochromatic connected nK4:
/// a color, a support set connected in that color, and n disjoint
/// monochromatic quads inside it.
struct Certificate {
    Color color;
    VertexSet support;
    std::vector<Quad> quads;
};

struct VerifyResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Re-validates every certificate invariant directly against the coloring,
/// using only coloring-core primitives. Independent of the extractor.
VerifyResult verify_certificate(const EdgeColoring& c, const Certificate& cert, int n);

/// The one branch the theorem leaves open: n=2 with a single blue quad
/// (conditional on R_2(2K4) <= 23). Carries the offending coloring.
struct Unresolved {
    std::string reason;
    EdgeColoring coloring;
    int n = 0;
    int k = 0;
    int t = 0;
};

struct ExtractOutcome {
    CaseTag tag;
    std::optional<Certificate> certificate;
    std::optional<Unresolved> unresolved;

    bool ok() const { return certificate.has_value(); }
};

/// Certificate extraction for a coloring of exactly 13n-3 vertices.
/// Pipeline: relabel so red is connected; red packing of size n; a blue
/// component packing n quads; otherwise the full case analysis over the
/// exact maximum blue packing (red certificate, or Unresolved for n=2,k=1).
/// Any other failure raises TheoremViolation. Deterministic.
ExtractOutcome extract(const EdgeColoring& c, int n,
                       const SearchBudget& budget = SearchBudget::from_env());

/// Bookkeeping that drives red-nK4 assembly in the case analysis.
/// `sets` are pairwise disjoint unions of whole blue components (all cross
/// edges red): U1..U3 for Case11, U1'..U4' for Case12 (U4' last), U1..U2
/// for Case21/Case22. quad_counts/uncovered_counts hold k_i/u_i per set;
/// matching_targets holds m_i for each matching-bearing set.
struct CaseBudget {
    CaseTag tag = CaseTag::Case11;
    int n = 0;
    std::vector<VertexSet> sets;
    std::vector<int> quad_counts;
    std::vector<int> uncovered_counts;
    std::vector<int> matching_targets;
    int n_prime = 0;  // Case12 only: 13n-3-4k-u4'
};

/// Builds the n red quads a CaseBudget promises: edge + two cross singletons
/// (Case11), cross quads through U4' plus edge quads (Case12), triangle +
/// singleton (Case21), or edge-edge pairing (Case22). Validates the budget
/// invariants and runs the exact kernels for the matchings/triangles.
std::vector<Quad> assemble_red_quads(const EdgeColoring& c, const CaseBudget& budget);

/// A whole blue component together with its exact quad count.
struct ComponentCount {
    VertexSet vertices;
    int count = 0;
};

/// Case 1.2 re-split at whole-component granularity: from each of the three
/// groups take either one component with count >= ceil(n/4), or accumulate
/// sub-threshold components until the threshold is crossed; everything else
/// (including quad-free components) goes to U4'.
struct CaseSplit {
    std::array<std::vector<ComponentCount>, 4> sets;
};

CaseSplit split_for_case_1_2(const std::array<std::vector<ComponentCount>, 3>& groups, int n);

/// The case-analysis engine behind step (4) of extract, exposed so the
/// Case11..Case22 paths can be driven directly on colorings whose blue
/// components all have packing <= n-1. Requires red connected and order
/// exactly 13n-3; recomputes exact per-component packings itself.
ExtractOutcome extract_via_cases(const EdgeColoring& c, int n,
                                 const SearchBudget& budget = SearchBudget::from_env());

// --- certificate file format (see README) ---

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text, int coloring_order);

}  // namespace ccm

#endif
