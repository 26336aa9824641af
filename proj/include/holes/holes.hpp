#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "holes/graph.hpp"
#include "holes/triangles.hpp"

namespace holes {

/// Endpoint degrees of a triangle, sorted ascending (d1 <= d2 <= d3).
struct DegreeTriple {
    std::uint64_t d1, d2, d3;
    friend auto operator<=>(const DegreeTriple&, const DegreeTriple&) = default;
};

/// Predicates receive the sorted degree triple and must be pure.
using DegreePredicate = std::function<bool(const DegreeTriple&)>;

/// d1^2 + d2^2 == d3^2 in exact 64-bit arithmetic. Degrees of triangle
/// endpoints are at least 2, so no degenerate zero cases arise here.
bool pythagorean_degrees(const DegreeTriple& d);

struct MatchedHole {
    Triangle tri;
    DegreeTriple degs;
    friend auto operator<=>(const MatchedHole&, const MatchedHole&) = default;
};

/// All triangles whose sorted endpoint-degree triple satisfies the
/// predicate, in lexicographic triangle order.
std::vector<MatchedHole> holes_matching(const Graph& g, const DegreePredicate& pred);

/// Census of a graph's primitive and Pythagorean holes. Connectivity is
/// never required: triangles live inside components, so h and h_p are
/// additive over disjoint unions.
struct HoleReport {
    std::uint64_t h = 0;                        // primitive hole count
    std::uint64_t h_p = 0;                      // Pythagorean hole count
    std::vector<MatchedHole> pyth_holes;        // h_p entries, lexicographic
    std::vector<std::uint64_t> primitive_degree;  // per-vertex triangle incidence
};

HoleReport hole_report(const Graph& g);

}  // namespace holes
