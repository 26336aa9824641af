#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holes {

using Vertex = int;

/// Simple undirected graph. Vertices are 0..n-1 internally; every vertex
/// carries the external numeric label it was built from (edge-list files,
/// 1-based generator indices, subset bitmasks). Graphs are immutable once
/// built: all operations in this library are pure functions over const
/// references, so shared graphs are safe to use from multiple threads.
struct Graph {
    std::vector<std::vector<Vertex>> adj;  // sorted neighbor lists, symmetric, loop-free
    std::vector<std::uint64_t> labels;     // external numeric label per vertex
    std::vector<std::string> names;        // optional display names (empty, or one per vertex)

    int vertex_count() const { return static_cast<int>(adj.size()); }
    std::uint64_t edge_count() const;
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    // Structural identity: adjacency plus labels. Display names are
    // presentation only and deliberately excluded (edge-list round trips
    // drop them).
    bool operator==(const Graph& other) const {
        return adj == other.adj && labels == other.labels;
    }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_) : std::runtime_error(what_), line(line_) {}
};

/// Builds a graph from unordered label pairs. Duplicate edges and swapped
/// orientations collapse to one undirected edge; the vertex set is exactly
/// the set of endpoint labels, compacted to 0-based indices in ascending
/// label order. Self-loops are rejected.
Graph build_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

/// Edge-list text format: one edge per line as two whitespace-separated
/// non-negative integer labels; '#' starts a comment that runs to end of
/// line; blank lines are ignored. Isolated vertices are not representable.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace holes
