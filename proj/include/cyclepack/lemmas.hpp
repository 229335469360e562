#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cyclepack/cycles.hpp"

namespace cyclepack {

using VertexSet = std::set<VertexId>;

// A family of pairwise disjoint cycles (each of order >= 3) together with a
// requested arc length per cycle. Arc searches below treat the family purely
// combinatorially; host-graph edges are irrelevant here.
struct CycleFamily {
    std::vector<Cycle> cycles;
    std::vector<int> path_lengths;
};

// Throws std::invalid_argument when sizes mismatch, a cycle is shorter than 3,
// or the cycles share a vertex; extra length bounds are checked per search.
void validate_family(const CycleFamily& f);

struct RerouteWitness {
    std::size_t cycle_index = 0;
    std::vector<VertexId> path;
    std::optional<VertexId> spare;
    std::optional<std::vector<VertexId>> second_path;
};

// Searches every cycle of the family for an arc with exactly path_lengths[i]
// vertices whose two ends lie in S, together with a vertex of T on the same
// cycle but off the arc. Requires 1 <= path_lengths[i] <= |F_i| - 1.
// Guaranteed to find one when |S|, |T| > (2/3)|V(family)|.
std::optional<RerouteWitness> find_path_with_spare(const CycleFamily& f, const VertexSet& S,
                                                   const VertexSet& T);

// On a single cycle of order >= 6 with p = floor(|c|/3), searches for two
// vertex-disjoint arcs of at least p+1 vertices each, the first with both ends
// in S, the second with both ends in T. Guaranteed when |S| >= p+1 and
// |T| >= 2p+2.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> find_disjoint_st_paths(
    const Cycle& c, const VertexSet& S, const VertexSet& T);

// On a family of at least 5 cycles of equal order r >= 4 with
// 1 <= path_lengths[i] < r/3: either the find_path_with_spare outcome (path +
// spare), or two disjoint arcs on one cycle, the first with ends in S, the
// second with ends in T, each of more than r/3 vertices (returned as path +
// second_path). Guaranteed when |S|, |T| > (2/3)(t*r) - r/3 for t cycles.
std::optional<RerouteWitness> find_reroute_or_double(const CycleFamily& f, const VertexSet& S,
                                                     const VertexSet& T);

// On a single cycle, searches for an arc of 2 <= len <= |c|/6 + 4 vertices
// with one end in S and the other in T; the S end comes first in the result.
// Guaranteed when |S|, |T| > |c|/3.
std::optional<std::vector<VertexId>> find_short_crossing_path(const Cycle& c, const VertexSet& S,
                                                              const VertexSet& T);

// Independent witness validation, used by the guarantee suites and tests.
// Deliberately written against the definitions only, not the search code.
bool is_arc_of(const Cycle& c, const std::vector<VertexId>& path);
bool check_spare_witness(const CycleFamily& f, const VertexSet& S, const VertexSet& T,
                         const RerouteWitness& w);
bool check_st_paths(const Cycle& c, const VertexSet& S, const VertexSet& T,
                    const std::vector<VertexId>& p, const std::vector<VertexId>& q,
                    std::size_t min_len);
bool check_double_witness(const CycleFamily& f, const VertexSet& S, const VertexSet& T,
                          const RerouteWitness& w);
bool check_crossing_witness(const Cycle& c, const VertexSet& S, const VertexSet& T,
                            const std::vector<VertexId>& path);

}  // namespace cyclepack
