#include "holes/setgraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "holes/holes.hpp"

namespace holes {

namespace {

constexpr int kBuildCap = 16;   // 65535 vertices
constexpr int kCensusCap = 8;   // ~10^6 triangles
constexpr int kCliqueCensusCap = 5;

void check_n(int n, int cap, const char* op) {
    if (n < 2)
        throw std::invalid_argument(std::string(op) +
                                    ": ground set must have at least two elements, got n=" +
                                    std::to_string(n));
    if (n > cap)
        throw std::invalid_argument(std::string(op) + ": n=" + std::to_string(n) +
                                    " exceeds the size guard (" + std::to_string(cap) + ")");
}

std::string subset_name(unsigned mask) {
    std::string s = "{";
    for (int bit = 0; mask >> bit; ++bit) {
        if (!(mask & (1u << bit))) continue;
        if (s.size() > 1) s += ",";
        s += "a" + std::to_string(bit + 1);
    }
    return s + "}";
}

}  // namespace

Graph build_setgraph(int n) {
    check_n(n, kBuildCap, "build_setgraph");
    const unsigned count = (1u << n) - 1;
    Graph g;
    g.adj.resize(count);
    g.labels.resize(count);
    g.names.resize(count);
    for (unsigned mask = 1; mask <= count; ++mask) {
        g.labels[mask - 1] = mask;
        g.names[mask - 1] = subset_name(mask);
    }
    for (unsigned u = 1; u <= count; ++u) {
        for (unsigned v = u + 1; v <= count; ++v) {
            if ((u & v) == 0) continue;
            g.adj[u - 1].push_back(static_cast<Vertex>(v - 1));
            g.adj[v - 1].push_back(static_cast<Vertex>(u - 1));
        }
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool check_degree_law(int n) {
    check_n(n, kBuildCap, "check_degree_law");
    Graph g = build_setgraph(n);
    int min_deg = g.degree(0), max_deg = g.degree(0);
    int max_count = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        min_deg = std::min(min_deg, g.degree(v));
        max_deg = std::max(max_deg, g.degree(v));
    }
    Vertex max_vertex = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == max_deg) {
            ++max_count;
            max_vertex = v;
        }
    if (max_deg != 2 * min_deg || max_count != 1) return false;
    // the unique maximum must be the full ground set
    if (g.labels[max_vertex] != (1u << n) - 1) return false;
    // singleton subsets are pairwise non-adjacent
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vertex u = static_cast<Vertex>((1u << i) - 1);
            Vertex v = static_cast<Vertex>((1u << j) - 1);
            if (g.has_edge(u, v)) return false;
        }
    return true;
}

DegreeLemmaReport check_triangle_inequality_lemma(int n) {
    check_n(n, kBuildCap, "check_triangle_inequality_lemma");
    Graph g = build_setgraph(n);

    // degree multiset, compressed to (value, multiplicity)
    std::vector<std::uint64_t> degs(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    std::vector<std::pair<std::uint64_t, int>> values;
    for (std::uint64_t d : degs) {
        if (!values.empty() && values.back().first == d)
            ++values.back().second;
        else
            values.emplace_back(d, 1);
    }

    DegreeLemmaReport report;
    report.strict_over_distinct_values = true;
    report.weak_over_multiset = true;
    const int m = static_cast<int>(values.size());
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int k = j; k < m; ++k) {
                auto [di, ci] = values[i];
                auto [dj, cj] = values[j];
                auto [dk, ck] = values[k];
                // the triple must be realizable by three distinct positions
                if (i == j && ci < 2) continue;
                if (j == k && cj < 2) continue;
                if (i == k && ci < 3) continue;
                if (i < j && j < k && di + dj <= dk) report.strict_over_distinct_values = false;
                if (di + dj < dk) report.weak_over_multiset = false;
                if (di + dj == dk) report.equality_triples.push_back({di, dj, dk});
            }
    return report;
}

bool check_no_pythagorean_holes(int n) {
    check_n(n, kCensusCap, "check_no_pythagorean_holes");
    Graph g = build_setgraph(n);
    return holes_matching(g, pythagorean_degrees).empty();
}

CliqueCensus count_largest_cliques(int n) {
    check_n(n, kCliqueCensusCap, "count_largest_cliques");
    return maximum_cliques(build_setgraph(n));
}

}  // namespace holes
