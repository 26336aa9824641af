#include "holes/holes.hpp"

#include <algorithm>
#include <cassert>

namespace holes {

bool pythagorean_degrees(const DegreeTriple& d) {
    assert(d.d1 > 0 && d.d1 <= d.d2 && d.d2 <= d.d3);
    return d.d1 * d.d1 + d.d2 * d.d2 == d.d3 * d.d3;
}

namespace {

inline DegreeTriple degree_triple(const Graph& g, const Triangle& t) {
    std::uint64_t d[3] = {static_cast<std::uint64_t>(g.degree(t.a)),
                          static_cast<std::uint64_t>(g.degree(t.b)),
                          static_cast<std::uint64_t>(g.degree(t.c))};
    std::sort(d, d + 3);
    return {d[0], d[1], d[2]};
}

}  // namespace

std::vector<MatchedHole> holes_matching(const Graph& g, const DegreePredicate& pred) {
    std::vector<MatchedHole> out;
    for_each_triangle(g, [&](const Triangle& t) {
        DegreeTriple d = degree_triple(g, t);
        if (pred(d)) out.push_back({t, d});
    });
    std::sort(out.begin(), out.end());
    return out;
}

HoleReport hole_report(const Graph& g) {
    HoleReport report;
    report.primitive_degree.assign(g.vertex_count(), 0);
    for_each_triangle(g, [&](const Triangle& t) {
        ++report.h;
        ++report.primitive_degree[t.a];
        ++report.primitive_degree[t.b];
        ++report.primitive_degree[t.c];
        DegreeTriple d = degree_triple(g, t);
        if (pythagorean_degrees(d)) report.pyth_holes.push_back({t, d});
    });
    std::sort(report.pyth_holes.begin(), report.pyth_holes.end());
    report.h_p = report.pyth_holes.size();
    return report;
}

}  // namespace holes
