#pragma once

#include <cstdint>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// Standard families used throughout the test and benchmark suites.
// Vertex ids are always 0..n-1.

Graph gen_complete(int n);
// Sides a (ids 0..a-1) and b (ids a..a+b-1).
Graph gen_complete_bipartite(int a, int b);
// Clique of order ceil(r/2)*k - 1 fully joined to an independent set of
// order n. Clique ids come first.
Graph gen_split(int k, int r, int n);
// gen_split plus a perfect matching on the independent side; n must be even.
Graph gen_split_matched(int k, int r, int n);
// `copies` disjoint cliques, each of order `size`.
Graph gen_disjoint_cliques(int size, int copies);
// k disjoint cycles, each of order r >= 3.
Graph gen_disjoint_cycles(int k, int r);
// Erdos-Renyi G(n, p); identical seeds give identical graphs.
Graph gen_gnp(int n, double p, std::uint64_t seed);

}  // namespace cyclepack
