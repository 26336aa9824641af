// Kernel benchmark: serial vs OpenMP triangle counting on the generator
// families plus a seeded random graph. Counts from both kernels must agree.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "holes/graph.hpp"
#include "holes/jaco.hpp"
#include "holes/setgraph.hpp"
#include "holes/triangles.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

holes::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u + 1, v + 1);
    return holes::build_graph(edges);
}

void bench(const std::string& name, const holes::Graph& g, int repeats) {
    auto t0 = clock_type::now();
    std::uint64_t serial = 0;
    for (int r = 0; r < repeats; ++r) serial = holes::triangle_count_serial(g);
    double serial_time = seconds_since(t0) / repeats;

    t0 = clock_type::now();
    std::uint64_t parallel = 0;
    for (int r = 0; r < repeats; ++r) parallel = holes::triangle_count(g);
    double parallel_time = seconds_since(t0) / repeats;

    std::printf("%-22s %9d %10llu %12llu %10.4fs %10.4fs %7.2fx %s\n", name.c_str(),
                g.vertex_count(), static_cast<unsigned long long>(g.edge_count()),
                static_cast<unsigned long long>(parallel), serial_time, parallel_time,
                parallel_time > 0 ? serial_time / parallel_time : 0.0,
                serial == parallel ? "ok" : "KERNELS DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
    int jaco_n = argc > 1 ? std::atoi(argv[1]) : 4000;
    int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-22s %9s %10s %12s %10s %10s %7s\n", "graph", "vertices", "edges", "triangles",
                "serial", "parallel", "speedup");

    bench("jaco J*_" + std::to_string(jaco_n), holes::underlying_graph(holes::build_jaco(jaco_n)),
          repeats);
    bench("setgraph n=8", holes::build_setgraph(8), repeats);
    bench("random n=2000 p=0.1", random_graph(2000, 0.1, 20240601), repeats);

    return 0;
}
