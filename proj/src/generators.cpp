#include "cyclepack/generators.hpp"

#include <random>
#include <stdexcept>

namespace cyclepack {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph gen_complete(int n) {
    require(n >= 1, "gen_complete: n >= 1 required");
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "gen_complete_bipartite: both sides >= 1 required");
    Graph g;
    for (int v = 0; v < a + b; ++v) g.add_vertex(v);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_split(int k, int r, int n) {
    require(k >= 1 && r >= 3 && n >= 1, "gen_split: k >= 1, r >= 3, n >= 1 required");
    int q = ((r + 1) / 2) * k - 1;
    Graph g = gen_complete(q);
    for (int v = q; v < q + n; ++v) g.add_vertex(v);
    for (int u = 0; u < q; ++u)
        for (int v = q; v < q + n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_split_matched(int k, int r, int n) {
    require(n % 2 == 0, "gen_split_matched: n must be even");
    Graph g = gen_split(k, r, n);
    int q = ((r + 1) / 2) * k - 1;
    for (int i = 0; i < n / 2; ++i) g.add_edge(q + 2 * i, q + 2 * i + 1);
    return g;
}

Graph gen_disjoint_cliques(int size, int copies) {
    require(size >= 1 && copies >= 1, "gen_disjoint_cliques: size >= 1, copies >= 1 required");
    Graph g;
    for (int c = 0; c < copies; ++c) {
        int base = c * size;
        for (int v = 0; v < size; ++v) g.add_vertex(base + v);
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v) g.add_edge(base + u, base + v);
    }
    return g;
}

Graph gen_disjoint_cycles(int k, int r) {
    require(k >= 1 && r >= 3, "gen_disjoint_cycles: k >= 1, r >= 3 required");
    Graph g;
    for (int c = 0; c < k; ++c) {
        int base = c * r;
        for (int v = 0; v < r; ++v) g.add_edge(base + v, base + (v + 1) % r);
    }
    return g;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 1, "gen_gnp: n >= 1 required");
    require(p >= 0.0 && p <= 1.0, "gen_gnp: p in [0, 1] required");
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    std::mt19937_64 rng(seed);
    // Top 53 bits -> uniform double in [0, 1); avoids distribution classes
    // whose output is implementation-defined.
    auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit() < p) g.add_edge(u, v);
    return g;
}

}  // namespace cyclepack
