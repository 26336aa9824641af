#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holes/graph.hpp"
#include "holes/holes.hpp"
#include "holes/triples.hpp"

namespace holes {

/// Finite prefix of the directed sequential graph J_n(1): vertex v_i emits
/// arcs to the next d+(v_i) = i - d-(v_i) indices, where d-(v_i) counts the
/// arcs already aimed at i by earlier vertices. The degree arrays hold the
/// intrinsic values (those of the infinite graph), computed through index
/// n+1 so that queries one step past the prefix stay exact; arc targets are
/// truncated at n.
struct JacoGraph {
    int n = 0;
    std::vector<int> d_minus;  // 1-based, valid for 1..n+1
    std::vector<int> d_plus;   // d_plus[i] = i - d_minus[i]

    int in_degree(int i) const { return d_minus[i]; }
    int out_degree(int i) const { return d_plus[i]; }
    int truncated_out_degree(int i) const { return std::min(d_plus[i], n - i); }
    long long reach(int i) const { return static_cast<long long>(i) + d_plus[i]; }
    bool has_arc(int i, int j) const { return 1 <= i && i < j && j <= n && j <= reach(i); }
    std::vector<std::pair<int, int>> arcs() const;
};

JacoGraph build_jaco(int n);

/// Underlying simple graph on vertices 1..n (labels keep the 1-based index).
Graph underlying_graph(const JacoGraph& j);

/// h(J*_{n+1}) from h(J*_n): adding v_{n+1} closes a triangle over every
/// pair of its in-neighbors, which form a clique of size d-(v_{n+1}).
std::uint64_t hole_recursion_step(const JacoGraph& j, std::uint64_t h_n);

/// Index i with n - i = d-(v_{n+1}); the prior form of the recursion sums
/// over n - i terms anchored at this vertex.
int jaconian_index(const JacoGraph& j);

struct CensusEntry {
    std::array<int, 3> vertices;  // 1-based, increasing
    DegreeTriple degs;
    TripleType type;
};

/// Every Pythagorean hole of J*_n(1), with the degree triple and its type.
std::vector<CensusEntry> pythagorean_census(int n);

/// floor(n/8), the closed-form predictor for the type-1 hole count. Always
/// cross-check against pythagorean_census: the census is ground truth.
std::uint64_t t1_count_formula(int n);

/// General per-type predictor floor(n / (c + d+(v_c))) for the root triple's
/// largest member c. Specializes to t1_count_formula for root (3,4,5). A
/// predictor only; never a substitute for the census.
std::uint64_t type_count_formula(int n, const Triple& root);

struct JacoRow {
    int i = 0;
    int d_minus = 0;
    int d_plus = 0;
    std::uint64_t h = 0;
    std::uint64_t h_p_t1 = 0;
    friend bool operator==(const JacoRow&, const JacoRow&) = default;
};

/// Rows 1..n_max of the adapted Fisher table. Hole counts come from a
/// direct per-prefix triangle census and are cross-checked against the
/// recursion; the type-1 column comes from pythagorean_census.
std::vector<JacoRow> fisher_table(int n_max);

/// Bundled reference values for rows 1..35 of the adapted Fisher table, as
/// published. The audit mode diffs computed rows against these.
const std::vector<JacoRow>& fisher_reference();

struct Discrepancy {
    int row = 0;
    std::string column;
    std::uint64_t reference = 0;
    std::uint64_t computed = 0;
};

/// Column-by-column diff of computed rows against reference rows (matched
/// by index i over the common range).
std::vector<Discrepancy> audit_fisher(const std::vector<JacoRow>& computed,
                                      const std::vector<JacoRow>& reference);

/// Scaling check for a triangle (i,j,k) of J*_n: if the edge between the
/// scaled endpoints l*i and l*k exists, the whole scaled triangle must. The
/// conclusion is verified on the built prefix, never assumed.
bool scaled_hole_check(int n, int l, const std::array<int, 3>& tri);

inline constexpr int kJacoCensusCap = 20000;

}  // namespace holes
