#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cyclepack/cycles.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

// One reduction step. Delete drops vertex a; Contract merges edge ab into
// min(a, b).
struct HistoryStep {
    enum class Kind { Delete, Contract };
    Kind kind = Kind::Delete;
    VertexId a = 0;
    VertexId b = 0;

    bool operator==(const HistoryStep&) const = default;
};

// Replayable record of a reduction run. branch_sets maps each surviving minor
// vertex to the set of original vertices merged into it; each such set induces
// a connected subgraph of the original.
struct ContractionHistory {
    std::vector<HistoryStep> steps;
    std::map<VertexId, std::set<VertexId>> branch_sets;

    bool operator==(const ContractionHistory&) const = default;
};

struct MinimalizeResult {
    Graph minor;
    ContractionHistory history;
    Rat original_average_degree;
    Rat final_average_degree;
};

// Greedily applies average-degree-preserving reductions until none applies:
// deleting a vertex keeps d when deg(v) <= d/2, contracting an edge keeps d
// when its endpoints have at most d/2 - 1 common neighbors. Deletions are
// preferred over contractions; ties go to minimum degree then smallest id,
// and fewest common neighbors then smallest (u, v). The result satisfies
// min_degree > d/2 and min_common_neighbors > d/2 - 1. Throws on the empty
// graph.
MinimalizeResult minimalize(const Graph& g);

// Applies recorded steps to a graph; the result is bit-identical to the minor
// the steps were recorded from.
Graph replay_history(const Graph& original, const std::vector<HistoryStep>& steps);

// Maps vertex-disjoint cycles (order >= 3) of the minor back to vertex-disjoint
// cycles of the original graph, each at least as long. Consecutive branch sets
// are joined by the lexicographically smallest crossing edge; within a branch
// set the entry-exit connection is a BFS shortest path. Throws when the input
// cycles are not disjoint cycles of the minor.
std::vector<Cycle> lift_packing(const Graph& original, const ContractionHistory& history,
                                const std::vector<Cycle>& minor_cycles);

// Text form: one "D v" or "C u v" line per step, then one
// "B <minor-vertex>: <original vertices>" line per branch set.
std::string format_history(const ContractionHistory& h);
ContractionHistory parse_history(const std::string& text);

}  // namespace cyclepack
