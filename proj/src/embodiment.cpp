#include "holes/embodiment.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "holes/holes.hpp"
#include "holes/invariants.hpp"
#include "holes/triangles.hpp"

namespace holes {

Graph build_embodiment(const Triple& t) {
    if (!is_pythagorean(t.a, t.b, t.c))
        throw std::invalid_argument("build_embodiment: (" + std::to_string(t.a) + "," +
                                    std::to_string(t.b) + "," + std::to_string(t.c) +
                                    ") is not Pythagorean");
    if (t.a < 3)
        throw std::invalid_argument(
            "build_embodiment: smallest member must be at least 3, got " + std::to_string(t.a));

    const int n = static_cast<int>(t.c) + 1;
    Graph g;
    g.adj.resize(n);
    g.labels.resize(n);
    for (Vertex v = 0; v < n; ++v) g.labels[v] = static_cast<std::uint64_t>(v) + 1;

    auto add_edge = [&g](Vertex u, Vertex v) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    };
    add_edge(0, 1);
    add_edge(0, 2);
    add_edge(1, 2);
    Vertex next = 3;
    for (long long i = 0; i < t.a - 2; ++i, ++next) {
        add_edge(next, 0);
        add_edge(next, 1);
        add_edge(next, 2);
    }
    for (long long i = 0; i < t.b - t.a; ++i, ++next) {
        add_edge(next, 1);
        add_edge(next, 2);
    }
    for (long long i = 0; i < t.c - t.b; ++i, ++next) add_edge(next, 2);

    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

EmbodimentReport verify_embodiment(const Triple& t) {
    EmbodimentReport report;
    report.triple = t;
    report.graph = build_embodiment(t);
    const Graph& g = report.graph;

    const auto a = static_cast<std::uint64_t>(t.a);
    const auto b = static_cast<std::uint64_t>(t.b);
    const auto c = static_cast<std::uint64_t>(t.c);

    report.order = {c + 1, static_cast<std::uint64_t>(g.vertex_count())};
    report.size = {a + b + c - 3, g.edge_count()};

    HoleReport census = hole_report(g);
    report.h = {2 * a + b - 5, census.h};
    bool is_345 = t.a == 3 && t.b == 4 && t.c == 5;
    report.h_p = {is_345 ? std::uint64_t{2} : std::uint64_t{1}, census.h_p};

    if (g.vertex_count() > kExactSolverCap) {
        report.chromatic.skipped = true;
        report.independence.skipped = true;
        report.cover.skipped = true;
        report.domination.skipped = true;
    } else {
        report.chromatic = {4, static_cast<std::uint64_t>(chromatic_number(g))};
        report.independence = {c - 2, static_cast<std::uint64_t>(independence_number(g))};
        report.cover = {3, static_cast<std::uint64_t>(vertex_cover_number(g))};
        report.domination = {1, static_cast<std::uint64_t>(domination_number(g))};
    }
    return report;
}

MinimalityResult minimality_check_345() {
    MinimalityResult result{0, 0};
    for (int n = 3; n <= 6 && result.min_order == 0; ++n) {
        const int slots = n * (n - 1) / 2;
        std::uint64_t best_size = 0;
        bool found = false;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            // decode the edge mask
            std::vector<std::vector<int>> adj(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1u << bit)) {
                        adj[u].push_back(v);
                        adj[v].push_back(u);
                    }
            auto has = [&adj](int u, int v) {
                for (int w : adj[u])
                    if (w == v) return true;
                return false;
            };
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    for (int w = v + 1; w < n; ++w) {
                        if (!(has(u, v) && has(u, w) && has(v, w))) continue;
                        int d[3] = {static_cast<int>(adj[u].size()), static_cast<int>(adj[v].size()),
                                    static_cast<int>(adj[w].size())};
                        std::sort(d, d + 3);
                        if (d[0] == 3 && d[1] == 4 && d[2] == 5) {
                            std::uint64_t edges = static_cast<std::uint64_t>(std::popcount(mask));
                            if (!found || edges < best_size) best_size = edges;
                            found = true;
                        }
                    }
        }
        if (found) {
            result.min_order = n;
            result.min_size = best_size;
        }
    }
    return result;
}

}  // namespace holes
