#pragma once

#include <cstdint>
#include <stdexcept>

#include "holes/graph.hpp"

namespace holes {

/// Hard ceiling for the exact NP-hard solvers. Instances above it are
/// rejected outright: these solvers never fall back to heuristics.
inline constexpr int kExactSolverCap = 128;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact chromatic number: clique lower bound, greedy upper bound, and a
/// saturation-ordered branch and bound between them.
int chromatic_number(const Graph& g);

/// Largest-first greedy coloring size; upper bound witness for the
/// chromatic number, exposed for sandwich checks.
int greedy_coloring_size(const Graph& g);

/// Exact maximum clique order (branch and bound with coloring bound).
int max_clique_size(const Graph& g);

/// Exact independence number, via maximum clique search on the complement.
int independence_number(const Graph& g);

/// Exact minimum vertex cover size. Computed by an independent-set search
/// with degree reductions, deliberately a different code path from
/// independence_number so the Gallai identity alpha + beta = n is a real
/// cross-check of two solvers rather than an arithmetic tautology.
int vertex_cover_number(const Graph& g);

/// Exact minimum dominating set size. Undefined (throws) for the empty graph.
int domination_number(const Graph& g);

struct CliqueCensus {
    int size = 0;             // maximum clique order
    std::uint64_t count = 0;  // number of distinct vertex sets inducing it
    friend bool operator==(const CliqueCensus&, const CliqueCensus&) = default;
};

/// Bron-Kerbosch enumeration of maximal cliques, reduced to the maximum
/// size and how many cliques attain it.
CliqueCensus maximum_cliques(const Graph& g);

}  // namespace holes
