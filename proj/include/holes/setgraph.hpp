#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "holes/graph.hpp"
#include "holes/invariants.hpp"

namespace holes {

/// Intersection graph of the non-empty subsets of an n-element ground set:
/// vertex labels are the subset bitmasks 1..2^n-1 (ascending), an edge
/// joins two subsets iff they intersect. Display names render subsets as
/// "{a1,a3}". Requires 2 <= n <= 16.
Graph build_setgraph(int n);

/// Degree structure: maximum degree is exactly twice the minimum, a single
/// vertex attains the maximum, and singleton subsets are pairwise
/// non-adjacent.
bool check_degree_law(int n);

/// Degree-sequence triangle inequality, reported rather than judged: the
/// strict form d_i + d_j > d_k holds over distinct degree values, while
/// repeated values reach equality (delta, delta, 2*delta). Both facts plus
/// the equality triples are returned; holds() is the weak reading (no
/// triple with d_i + d_j < d_k).
struct DegreeLemmaReport {
    bool strict_over_distinct_values = false;
    bool weak_over_multiset = false;
    std::vector<std::array<std::uint64_t, 3>> equality_triples;  // d_i + d_j == d_k
    bool holds() const { return strict_over_distinct_values && weak_over_multiset; }
};
DegreeLemmaReport check_triangle_inequality_lemma(int n);

/// True iff the full Pythagorean-hole census comes back empty (2 <= n <= 8).
bool check_no_pythagorean_holes(int n);

/// Size and multiplicity of the largest cliques (2 <= n <= 5).
CliqueCensus count_largest_cliques(int n);

}  // namespace holes
