#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "holes/graph.hpp"

namespace holes {

/// A triangle (primitive hole) stored as a strictly increasing vertex triple.
struct Triangle {
    Vertex a, b, c;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Forward-neighbor structure for compact-forward triangle enumeration:
/// vertices are ranked by (degree, index) and each list keeps only the
/// neighbors of higher rank, sorted by rank. Every triangle then shows up
/// exactly once, as the rank-sorted pair intersection.
struct ForwardView {
    std::vector<int> rank;                  // rank[v] = position of v in the ordering
    std::vector<std::vector<Vertex>> fwd;   // fwd[v] = higher-ranked neighbors, rank-sorted
    explicit ForwardView(const Graph& g);
};

/// Visits every triangle once (serial, deterministic order by source
/// vertex; the triples passed to f are index-sorted but not globally
/// lexicographic).
template <class F>
void for_each_triangle(const Graph& g, const ForwardView& view, F&& f) {
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : view.fwd[u]) {
            const auto& fu = view.fwd[u];
            const auto& fv = view.fwd[v];
            auto iu = fu.begin(), iv = fv.begin();
            while (iu != fu.end() && iv != fv.end()) {
                if (view.rank[*iu] < view.rank[*iv]) {
                    ++iu;
                } else if (view.rank[*iv] < view.rank[*iu]) {
                    ++iv;
                } else {
                    Vertex w = *iu;
                    Vertex t[3] = {u, v, w};
                    std::sort(t, t + 3);
                    f(Triangle{t[0], t[1], t[2]});
                    ++iu;
                    ++iv;
                }
            }
        }
    }
}

template <class F>
void for_each_triangle(const Graph& g, F&& f) {
    for_each_triangle(g, ForwardView(g), static_cast<F&&>(f));
}

/// OpenMP-parallel triangle count (compact-forward kernel).
std::uint64_t triangle_count(const Graph& g);

/// Serial reference implementation of the same kernel, kept for tests and
/// the kernel benchmark.
std::uint64_t triangle_count_serial(const Graph& g);

/// All triangles, each exactly once, in lexicographic order of the
/// increasing index triple. Enumeration runs in parallel; the result is
/// sorted, so output does not depend on thread count.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Number of primitive holes h(G).
std::uint64_t primitive_hole_number(const Graph& g);

/// Triangles through each vertex, for all vertices at once.
std::vector<std::uint64_t> primitive_degrees(const Graph& g);

/// Triangles through one vertex, counted locally from its neighborhood.
std::uint64_t primitive_degree(const Graph& g, Vertex v);

}  // namespace holes
