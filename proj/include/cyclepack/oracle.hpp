#pragma once

#include <cstdint>

#include "cyclepack/cycles.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

struct OracleBudget {
    std::size_t max_vertices = 20;              // hard cap 64 (bitmask width)
    std::uint64_t max_nodes = 50'000'000;
};

enum class OracleStatus { Yes, No, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::No;
    std::vector<Cycle> cycles;                  // witness packing when Yes
    std::uint64_t nodes = 0;
};

// Complete backtracking search for k vertex-disjoint cycles of order >= r.
// Branches on the lowest-id uncovered vertex: enumerate every cycle through
// it, or exclude it. "No" is only reported after exhausting the space; any
// budget hit reports BudgetExceeded instead. Throws when k < 1 or r < 3.
OracleResult exact_pack(const Graph& g, int k, int r, const OracleBudget& budget = {});

}  // namespace cyclepack
