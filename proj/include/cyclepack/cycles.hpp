#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclepack/graph.hpp"

namespace cyclepack {

// A cycle as its vertex sequence. Orders 1 and 2 are admitted as degenerate
// cycles standing for a single vertex and a single edge.
using Cycle = std::vector<VertexId>;

// Canonical rotation: the smallest vertex comes first; for order >= 3 the
// direction is the one whose second vertex is the smaller neighbor.
Cycle canonical_cycle(Cycle c);

// Lexicographic potential (|C(r)|, |C(r-1)|, ..., |C(1)|). Every local-search
// move must strictly increase it.
struct Potential {
    std::vector<long long> counts;
    auto operator<=>(const Potential&) const = default;
};

std::string format_potential(const Potential& p);

// Pairwise vertex-disjoint cycles of order 1..r, bucketed by order.
class CycleCollection {
public:
    explicit CycleCollection(int r);

    int order_cap() const { return r_; }

    // Canonicalizes first. Throws when the order is outside 1..r or any
    // vertex is already covered.
    void insert(Cycle c);
    // Throws when the cycle is absent.
    void erase(const Cycle& c);
    bool contains(const Cycle& c) const;

    const std::set<Cycle>& bucket(int order) const;
    std::vector<Cycle> all_cycles() const;  // ascending order, canonical within buckets
    std::size_t cycle_count() const;
    std::size_t covered_vertices() const;
    std::optional<Cycle> cycle_containing(VertexId v) const;

    bool operator==(const CycleCollection&) const = default;

private:
    int r_;
    std::map<int, std::set<Cycle>> buckets_;
    std::map<VertexId, Cycle> owner_;
};

Potential potential(const CycleCollection& c);

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Checks cycles against the host graph: vertices exist, consecutive pairs are
// edges (orders >= 2), disjointness, and optionally that every vertex of g is
// covered.
ValidationReport validate(const CycleCollection& c, const Graph& g, bool require_spanning);

// One 1-cycle per vertex of g. Throws when r < 3.
CycleCollection seed_collection(const Graph& g, int r);

// JSON shape: {"r": <int>, "cycles": [[v, ...], ...]}.
std::string collection_to_json(const CycleCollection& c);
CycleCollection collection_from_json(const std::string& text);

}  // namespace cyclepack
