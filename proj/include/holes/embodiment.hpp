#pragma once

#include <cstdint>

#include "holes/graph.hpp"
#include "holes/triples.hpp"

namespace holes {

/// The minimum-order graph realizing a Pythagorean triple (a,b,c) as the
/// degrees of one triangle: hub triangle v1v2v3, then a-2 vertices joined
/// to all of v1,v2,v3, b-a vertices joined to v2,v3, and c-b pendants on
/// v3. Vertices are numbered in construction order (hub first, labels
/// 1..c+1), which keeps edge-list output byte-deterministic.
Graph build_embodiment(const Triple& t);

/// One predicted-vs-computed invariant. Computed values always come from
/// the graph solvers, never from the formulas they are checked against.
struct Check {
    std::uint64_t predicted = 0;
    std::uint64_t computed = 0;
    bool skipped = false;  // solver cap exceeded; no verdict
    bool match() const { return !skipped && predicted == computed; }
};

struct EmbodimentReport {
    Triple triple;
    Graph graph;
    Check order, size, h, h_p, chromatic, independence, cover, domination;

    bool all_match() const {
        return order.match() && size.match() && h.match() && h_p.match() && chromatic.match() &&
               independence.match() && cover.match() && domination.match();
    }
    bool any_mismatch() const {
        auto bad = [](const Check& c) { return !c.skipped && c.predicted != c.computed; };
        return bad(order) || bad(size) || bad(h) || bad(h_p) || bad(chromatic) ||
               bad(independence) || bad(cover) || bad(domination);
    }
};

/// Builds the embodiment and checks every closed-form invariant against
/// direct computation. Mismatches are reported, not suppressed; invariants
/// beyond the exact-solver cap are marked skipped.
EmbodimentReport verify_embodiment(const Triple& t);

/// Brute-force minimality evidence for (3,4,5): scans every graph on up to
/// 6 vertices for a triangle with endpoint degrees (3,4,5).
struct MinimalityResult {
    int min_order = 0;          // smallest order admitting such a triangle
    std::uint64_t min_size = 0; // smallest edge count at that order
};
MinimalityResult minimality_check_345();

}  // namespace holes
