#include "holes/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace holes {

namespace {

// Fixed 128-bit vertex set; kExactSolverCap keeps indices in range.
struct Bits {
    std::array<std::uint64_t, 2> w{0, 0};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
    bool empty() const { return (w[0] | w[1]) == 0; }
    int first() const {
        if (w[0]) return std::countr_zero(w[0]);
        if (w[1]) return 64 + std::countr_zero(w[1]);
        return -1;
    }
    Bits operator&(const Bits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    Bits operator|(const Bits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    // set difference; safe without tail masking because *this carries no stray bits
    Bits minus(const Bits& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
};

template <class F>
void for_bits(const Bits& b, F&& f) {
    for (int word = 0; word < 2; ++word) {
        std::uint64_t x = b.w[word];
        while (x) {
            f(word * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
}

void require_cap(const Graph& g, const char* op) {
    if (g.vertex_count() > kExactSolverCap)
        throw CapExceeded(std::string(op) + ": instance too large (" +
                          std::to_string(g.vertex_count()) + " vertices, exact solver cap " +
                          std::to_string(kExactSolverCap) + ")");
}

std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> rows(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex u : g.adj[v]) rows[v].set(u);
    return rows;
}

std::vector<Bits> complement_bits(const std::vector<Bits>& adj) {
    const int n = static_cast<int>(adj.size());
    Bits full;
    for (int v = 0; v < n; ++v) full.set(v);
    std::vector<Bits> rows(n);
    for (int v = 0; v < n; ++v) {
        rows[v] = full.minus(adj[v]);
        rows[v].reset(v);
    }
    return rows;
}

// --- maximum clique (Tomita-style branch and bound with coloring bound) ---

struct CliqueSearch {
    const std::vector<Bits>& adj;
    int best = 0;

    void expand(int depth, Bits cand) {
        if (cand.empty()) {
            best = std::max(best, depth);
            return;
        }
        // greedy coloring of the candidate set; color index bounds any
        // clique extension drawn from the colored prefix
        std::vector<int> order, bound;
        Bits uncolored = cand;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            Bits cls = uncolored;
            while (!cls.empty()) {
                int v = cls.first();
                cls = cls.minus(adj[v]);
                cls.reset(v);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        Bits live = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[i] <= best) return;
            int v = order[i];
            expand(depth + 1, live & adj[v]);
            live.reset(v);
        }
    }
};

int max_clique_size_bits(const std::vector<Bits>& adj) {
    Bits all;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) all.set(v);
    CliqueSearch search{adj};
    search.expand(0, all);
    return search.best;
}

// --- Bron-Kerbosch with pivoting, tracking maximum size and multiplicity ---

struct BronKerbosch {
    const std::vector<Bits>& adj;
    int best = 0;
    std::uint64_t count = 0;

    void run(int depth, Bits p, Bits x) {
        if (p.empty() && x.empty()) {
            if (depth > best) {
                best = depth;
                count = 1;
            } else if (depth == best) {
                ++count;
            }
            return;
        }
        int pivot = -1, pivot_deg = -1;
        for_bits(p | x, [&](int u) {
            int d = (p & adj[u]).count();
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = u;
            }
        });
        Bits branch = p.minus(adj[pivot]);
        for_bits(branch, [&](int v) {
            run(depth + 1, p & adj[v], x & adj[v]);
            p.reset(v);
            x.set(v);
        });
    }
};

// --- exact k-colorability (DSATUR-ordered backtracking) ---

struct ColorSearch {
    const std::vector<Bits>& adj;
    int n, k;
    std::vector<int> color;  // 0 = unassigned

    bool solve(int assigned, int used) {
        if (assigned == n) return true;
        // most saturated uncolored vertex, ties by degree in the graph
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            Bits seen;
            for_bits(adj[v], [&](int u) {
                if (color[u]) seen.set(color[u] - 1);
            });
            int sat = seen.count();
            int deg = adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        Bits neighbor_colors;
        for_bits(adj[pick], [&](int u) {
            if (color[u]) neighbor_colors.set(color[u] - 1);
        });
        // allow at most one brand-new color: introducing two distinct fresh
        // colors is symmetric
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (neighbor_colors.test(c - 1)) continue;
            color[pick] = c;
            if (solve(assigned + 1, std::max(used, c))) return true;
            color[pick] = 0;
        }
        return false;
    }
};

// --- maximum independent set with reductions (vertex cover route) ---

struct MisSearch {
    const std::vector<Bits>& adj;
    int best = 0;

    void search(Bits active, int chosen) {
        for (;;) {
            if (chosen + active.count() <= best) return;
            if (active.empty()) {
                best = std::max(best, chosen);
                return;
            }
            // reduction: a vertex with no or one active neighbor always
            // joins some maximum independent set
            int low = -1, low_deg = -1, high = -1, high_deg = -1;
            bool reduced = false;
            for_bits(active, [&](int v) {
                int d = (active & adj[v]).count();
                if (d <= 1 && !reduced) {
                    low = v;
                    low_deg = d;
                    reduced = true;
                }
                if (d > high_deg) {
                    high_deg = d;
                    high = v;
                }
            });
            if (reduced) {
                active.reset(low);
                active = active.minus(adj[low]);
                ++chosen;
                continue;
            }
            // branch on the highest-degree vertex: either it is in the set
            // (drop its closed neighborhood) or it is not (drop it)
            Bits with = active.minus(adj[high]);
            with.reset(high);
            search(with, chosen + 1);
            active.reset(high);
        }
    }
};

// --- minimum dominating set ---

struct DominationSearch {
    const std::vector<Bits>& closed;  // closed neighborhoods N[v]
    Bits all;
    int n;
    int best;

    void search(Bits covered, int chosen) {
        if (chosen >= best) return;
        Bits uncovered = all.minus(covered);
        if (uncovered.empty()) {
            best = chosen;
            return;
        }
        // lower bound: nobody covers more than max_cover uncovered vertices
        int max_cover = 0;
        for (int v = 0; v < n; ++v)
            max_cover = std::max(max_cover, (closed[v] & uncovered).count());
        int need = (uncovered.count() + max_cover - 1) / max_cover;
        if (chosen + need >= best) return;
        // branch on the uncovered vertex with fewest potential dominators
        int pick = -1, pick_opts = n + 1;
        for_bits(uncovered, [&](int u) {
            int opts = closed[u].count();
            if (opts < pick_opts) {
                pick_opts = opts;
                pick = u;
            }
        });
        std::vector<int> dominators;
        for_bits(closed[pick], [&](int v) { dominators.push_back(v); });
        std::sort(dominators.begin(), dominators.end(), [&](int a, int b) {
            return (closed[a] & uncovered).count() > (closed[b] & uncovered).count();
        });
        for (int v : dominators) search(covered | closed[v], chosen + 1);
    }
};

}  // namespace

int greedy_coloring_size(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<int> color(n, 0);
    int used = 0;
    for (Vertex v : order) {
        std::vector<bool> taken(used + 2, false);
        for (Vertex u : g.adj[v])
            if (color[u] && color[u] <= used + 1) taken[color[u]] = true;
        int c = 1;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

int max_clique_size(const Graph& g) {
    require_cap(g, "max_clique_size");
    if (g.vertex_count() == 0) return 0;
    return max_clique_size_bits(adjacency_bits(g));
}

int chromatic_number(const Graph& g) {
    require_cap(g, "chromatic_number");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto adj = adjacency_bits(g);
    int lower = max_clique_size_bits(adj);
    int upper = greedy_coloring_size(g);
    for (int k = lower; k < upper; ++k) {
        ColorSearch cs{adj, n, k, std::vector<int>(n, 0)};
        if (cs.solve(0, 0)) return k;
    }
    return upper;
}

int independence_number(const Graph& g) {
    require_cap(g, "independence_number");
    if (g.vertex_count() == 0) return 0;
    return max_clique_size_bits(complement_bits(adjacency_bits(g)));
}

int vertex_cover_number(const Graph& g) {
    require_cap(g, "vertex_cover_number");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto adj = adjacency_bits(g);
    Bits all;
    for (int v = 0; v < n; ++v) all.set(v);
    MisSearch mis{adj};
    mis.search(all, 0);
    return n - mis.best;
}

int domination_number(const Graph& g) {
    require_cap(g, "domination_number");
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("domination_number: undefined for the empty graph");
    auto adj = adjacency_bits(g);
    std::vector<Bits> closed = adj;
    Bits all;
    for (int v = 0; v < n; ++v) {
        closed[v].set(v);
        all.set(v);
    }
    // greedy upper bound seeds the search
    Bits covered;
    int greedy = 0;
    while (covered.count() < n) {
        int pick = 0, gain = -1;
        for (int v = 0; v < n; ++v) {
            int grow = (closed[v].minus(covered)).count();
            if (grow > gain) {
                gain = grow;
                pick = v;
            }
        }
        covered = covered | closed[pick];
        ++greedy;
    }
    DominationSearch search{closed, all, n, greedy};
    search.search(Bits{}, 0);
    return search.best;
}

CliqueCensus maximum_cliques(const Graph& g) {
    require_cap(g, "maximum_cliques");
    const int n = g.vertex_count();
    if (n == 0) return {0, 0};
    auto adj = adjacency_bits(g);
    Bits all;
    for (int v = 0; v < n; ++v) all.set(v);
    BronKerbosch bk{adj};
    bk.run(0, all, Bits{});
    return {bk.best, bk.count};
}

}  // namespace holes
