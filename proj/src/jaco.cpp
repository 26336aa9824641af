#include "holes/jaco.hpp"

#include <algorithm>
#include <stdexcept>

#include "holes/triangles.hpp"

namespace holes {

namespace {

void check_census_n(int n, const char* op) {
    if (n < 1) throw std::invalid_argument(std::string(op) + ": n must be positive");
    if (n > kJacoCensusCap)
        throw std::invalid_argument(std::string(op) + ": n=" + std::to_string(n) +
                                    " exceeds the census ceiling " + std::to_string(kJacoCensusCap));
}

}  // namespace

std::vector<std::pair<int, int>> JacoGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i) {
        int hi = std::min<long long>(reach(i), n);
        for (int j = i + 1; j <= hi; ++j) out.emplace_back(i, j);
    }
    return out;
}

JacoGraph build_jaco(int n) {
    if (n < 1) throw std::invalid_argument("build_jaco: n must be positive, got " + std::to_string(n));
    const int top = n + 1;  // degrees one past the prefix stay exact
    JacoGraph j;
    j.n = n;
    j.d_minus.assign(top + 2, 0);
    j.d_plus.assign(top + 2, 0);
    // d-(i) counts vertices v < i whose arc range [v+1, reach(v)] covers i;
    // ranges end monotonically, so a sweep with expiry counters suffices
    std::vector<int> expire(top + 3, 0);
    int active = 0;
    for (int i = 1; i <= top; ++i) {
        active -= expire[i];
        j.d_minus[i] = active;
        j.d_plus[i] = i - active;
        long long r = j.reach(i);
        long long stop = std::min<long long>(r, top) + 1;  // stops covering past reach(i)
        ++expire[stop];
        ++active;
    }
    return j;
}

Graph underlying_graph(const JacoGraph& j) {
    const int n = j.n;
    Graph g;
    g.adj.resize(n);
    g.labels.resize(n);
    for (int i = 1; i <= n; ++i) {
        g.labels[i - 1] = static_cast<std::uint64_t>(i);
        int lo = i - j.d_minus[i];
        int hi = std::min<long long>(j.reach(i), n);
        auto& nbrs = g.adj[i - 1];
        nbrs.reserve((i - lo) + std::max(0, hi - i));
        for (int v = lo; v < i; ++v) nbrs.push_back(v - 1);
        for (int v = i + 1; v <= hi; ++v) nbrs.push_back(v - 1);
    }
    return g;
}

std::uint64_t hole_recursion_step(const JacoGraph& j, std::uint64_t h_n) {
    std::uint64_t d = static_cast<std::uint64_t>(j.d_minus[j.n + 1]);
    return h_n + d * (d - 1) / 2;
}

int jaconian_index(const JacoGraph& j) { return j.n - j.d_minus[j.n + 1]; }

std::vector<CensusEntry> pythagorean_census(int n) {
    check_census_n(n, "pythagorean_census");
    Graph g = underlying_graph(build_jaco(n));
    std::vector<CensusEntry> out;
    for (const MatchedHole& hole : holes_matching(g, pythagorean_degrees)) {
        Triple triple = make_triple(static_cast<long long>(hole.degs.d1),
                                    static_cast<long long>(hole.degs.d2),
                                    static_cast<long long>(hole.degs.d3));
        out.push_back({{hole.tri.a + 1, hole.tri.b + 1, hole.tri.c + 1}, hole.degs, classify(triple)});
    }
    return out;
}

std::uint64_t t1_count_formula(int n) {
    if (n < 1) throw std::invalid_argument("t1_count_formula: n must be positive");
    return static_cast<std::uint64_t>(n) / 8;
}

std::uint64_t type_count_formula(int n, const Triple& root) {
    if (n < 1) throw std::invalid_argument("type_count_formula: n must be positive");
    const int c = static_cast<int>(root.root_c);
    JacoGraph j = build_jaco(c);
    return static_cast<std::uint64_t>(n) / (static_cast<std::uint64_t>(c) + j.d_plus[c]);
}

std::vector<JacoRow> fisher_table(int n_max) {
    check_census_n(n_max, "fisher_table");
    std::vector<JacoRow> rows;
    rows.reserve(n_max);
    std::uint64_t prev_h = 0;
    for (int i = 1; i <= n_max; ++i) {
        JacoGraph j = build_jaco(i);
        std::uint64_t h = triangle_count(underlying_graph(j));
        if (i >= 2) {
            JacoGraph prev = build_jaco(i - 1);
            if (hole_recursion_step(prev, prev_h) != h)
                throw std::logic_error("fisher_table: census and recursion disagree at i=" +
                                       std::to_string(i));
        }
        prev_h = h;
        std::uint64_t t1 = 0;
        for (const CensusEntry& e : pythagorean_census(i))
            if (e.type == TripleType{TripleType::Kind::t, 1}) ++t1;
        rows.push_back({i, j.d_minus[i], j.d_plus[i], h, t1});
    }
    return rows;
}

const std::vector<JacoRow>& fisher_reference() {
    static const std::vector<JacoRow> rows = {
        {1, 0, 1, 0, 0},    {2, 1, 1, 0, 0},    {3, 1, 2, 0, 0},    {4, 1, 3, 0, 0},
        {5, 2, 3, 1, 0},    {6, 2, 4, 2, 0},    {7, 3, 4, 5, 0},    {8, 3, 5, 8, 1},
        {9, 3, 6, 11, 1},   {10, 4, 6, 17, 1},  {11, 4, 7, 23, 1},  {12, 4, 8, 29, 1},
        {13, 5, 8, 39, 1},  {14, 5, 9, 49, 1},  {15, 6, 9, 64, 1},  {16, 6, 10, 79, 2},
        {17, 6, 11, 94, 2}, {18, 7, 11, 115, 2}, {19, 7, 12, 136, 2}, {20, 8, 12, 164, 2},
        {21, 8, 13, 192, 2}, {22, 8, 14, 220, 2}, {23, 9, 14, 256, 2}, {24, 9, 15, 292, 3},
        {25, 9, 16, 328, 3}, {26, 10, 16, 373, 3}, {27, 10, 17, 418, 3}, {28, 11, 17, 473, 3},
        {29, 11, 18, 528, 3}, {30, 11, 19, 583, 3}, {31, 12, 19, 649, 3}, {32, 12, 20, 715, 4},
        {33, 12, 21, 781, 4}, {34, 13, 21, 859, 4}, {35, 13, 22, 937, 4},
    };
    return rows;
}

std::vector<Discrepancy> audit_fisher(const std::vector<JacoRow>& computed,
                                      const std::vector<JacoRow>& reference) {
    std::vector<Discrepancy> out;
    for (const JacoRow& ref : reference) {
        auto it = std::find_if(computed.begin(), computed.end(),
                               [&ref](const JacoRow& r) { return r.i == ref.i; });
        if (it == computed.end()) continue;
        auto diff = [&out, &ref](const char* col, std::uint64_t want, std::uint64_t got) {
            if (want != got) out.push_back({ref.i, col, want, got});
        };
        diff("d_minus", ref.d_minus, it->d_minus);
        diff("d_plus", ref.d_plus, it->d_plus);
        diff("h", ref.h, it->h);
        diff("h_p_t1", ref.h_p_t1, it->h_p_t1);
    }
    return out;
}

bool scaled_hole_check(int n, int l, const std::array<int, 3>& tri) {
    if (l < 1) throw std::invalid_argument("scaled_hole_check: scale must be positive");
    auto [i, j, k] = tri;
    if (!(1 <= i && i < j && j < k && k <= n))
        throw std::invalid_argument("scaled_hole_check: not an increasing vertex triple within the prefix");
    {
        JacoGraph base = build_jaco(n);
        if (!(base.has_arc(i, j) && base.has_arc(i, k) && base.has_arc(j, k)))
            throw std::invalid_argument("scaled_hole_check: given triple is not a triangle of the prefix");
    }
    long long lk = static_cast<long long>(l) * k;
    if (lk > kJacoCensusCap)
        throw std::invalid_argument("scaled_hole_check: scaled prefix " + std::to_string(lk) +
                                    " exceeds the census ceiling " + std::to_string(kJacoCensusCap));
    JacoGraph scaled = build_jaco(static_cast<int>(lk));
    if (!scaled.has_arc(l * i, l * k)) return false;
    // hypothesis holds; the remaining two edges must follow
    return scaled.has_arc(l * i, l * j) && scaled.has_arc(l * j, l * k);
}

}  // namespace holes
