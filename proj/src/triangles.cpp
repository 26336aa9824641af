#include "holes/triangles.hpp"

#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holes {

ForwardView::ForwardView(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    rank.assign(n, 0);
    for (int r = 0; r < n; ++r) rank[order[r]] = r;

    fwd.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.adj[v])
            if (rank[w] > rank[v]) fwd[v].push_back(w);
        std::sort(fwd[v].begin(), fwd[v].end(),
                  [this](Vertex a, Vertex b) { return rank[a] < rank[b]; });
    }
}

namespace {

// Intersection size of two rank-sorted forward lists.
inline std::uint64_t count_common(const std::vector<int>& rank, const std::vector<Vertex>& fu,
                                  const std::vector<Vertex>& fv) {
    std::uint64_t hits = 0;
    auto iu = fu.begin(), iv = fv.begin();
    while (iu != fu.end() && iv != fv.end()) {
        int ru = rank[*iu], rv = rank[*iv];
        if (ru < rv)
            ++iu;
        else if (rv < ru)
            ++iv;
        else {
            ++hits;
            ++iu;
            ++iv;
        }
    }
    return hits;
}

}  // namespace

std::uint64_t triangle_count(const Graph& g) {
    ForwardView view(g);
    const int n = g.vertex_count();
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : view.fwd[u]) total += count_common(view.rank, view.fwd[u], view.fwd[v]);
    return total;
}

std::uint64_t triangle_count_serial(const Graph& g) {
    ForwardView view(g);
    std::uint64_t total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : view.fwd[u]) total += count_common(view.rank, view.fwd[u], view.fwd[v]);
    return total;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
    ForwardView view(g);
    const int n = g.vertex_count();
    std::vector<std::vector<Triangle>> per_source(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : view.fwd[u]) {
            const auto& fu = view.fwd[u];
            const auto& fv = view.fwd[v];
            auto iu = fu.begin(), iv = fv.begin();
            while (iu != fu.end() && iv != fv.end()) {
                int ru = view.rank[*iu], rv = view.rank[*iv];
                if (ru < rv)
                    ++iu;
                else if (rv < ru)
                    ++iv;
                else {
                    Vertex t[3] = {u, v, *iu};
                    std::sort(t, t + 3);
                    per_source[u].push_back(Triangle{t[0], t[1], t[2]});
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    std::size_t total = 0;
    for (const auto& bucket : per_source) total += bucket.size();
    std::vector<Triangle> out;
    out.reserve(total);
    for (auto& bucket : per_source) out.insert(out.end(), bucket.begin(), bucket.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t primitive_hole_number(const Graph& g) { return triangle_count(g); }

std::vector<std::uint64_t> primitive_degrees(const Graph& g) {
    ForwardView view(g);
    const int n = g.vertex_count();
    std::vector<std::uint64_t> counts(n, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(n, 0);
#pragma omp for schedule(dynamic, 64) nowait
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v : view.fwd[u]) {
                const auto& fu = view.fwd[u];
                const auto& fv = view.fwd[v];
                auto iu = fu.begin(), iv = fv.begin();
                while (iu != fu.end() && iv != fv.end()) {
                    int ru = view.rank[*iu], rv = view.rank[*iv];
                    if (ru < rv)
                        ++iu;
                    else if (rv < ru)
                        ++iv;
                    else {
                        ++local[u];
                        ++local[v];
                        ++local[*iu];
                        ++iu;
                        ++iv;
                    }
                }
            }
        }
#pragma omp critical
        for (Vertex v = 0; v < n; ++v) counts[v] += local[v];
    }
#else
    for_each_triangle(g, view, [&counts](const Triangle& t) {
        ++counts[t.a];
        ++counts[t.b];
        ++counts[t.c];
    });
#endif
    return counts;
}

std::uint64_t primitive_degree(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                std::to_string(g.vertex_count()));
    std::uint64_t count = 0;
    const auto& nbrs = g.adj[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i], nbrs[j])) ++count;
    return count;
}

}  // namespace holes
