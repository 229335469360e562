#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclepack/cycles.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

enum class MoveKind {
    MergeOneCycles,
    AbsorbCommonNeighbor,
    AbsorbTwoForOne,
    BridgeSwap,
    RerouteExtend,
    DoubleReroute,
    BigCycleMerge,
    SuccessLongCycle,
};

const char* move_kind_name(MoveKind kind);
std::optional<MoveKind> move_kind_from_name(const std::string& name);

// Catalog order tried by find_move: cheap structural moves first, then
// bridge swaps, then the arc-search powered moves.
std::vector<MoveKind> default_move_order();

// When success is false: replace `removed` by `added` (vertex sets match, so
// spanning is preserved; displaced vertices reappear as 1-cycles in `added`).
// When success is true: `added` holds at least k disjoint cycles of order
// >= r and the search stops.
struct Move {
    MoveKind kind = MoveKind::MergeOneCycles;
    std::vector<Cycle> removed;
    std::vector<Cycle> added;
    bool success = false;

    bool operator==(const Move&) const = default;
};

struct PackConfig {
    int k = 0;
    int r = 0;
    std::vector<MoveKind> move_order = default_move_order();
    long long max_iterations = 1'000'000;
};

struct TraceEntry {
    Move move;
    Potential potential_after;
};

struct PackingCertificate {
    int k = 0;
    int r = 0;
    std::vector<Cycle> cycles;
};

struct StuckInfo {
    std::string reason;
    std::vector<std::string> guard_findings;
};

struct PackResult {
    bool success = false;
    std::optional<PackingCertificate> certificate;
    std::optional<StuckInfo> stuck;
    std::vector<TraceEntry> trace;
    std::optional<CycleCollection> final_collection;
};

// First applicable move under cfg.move_order; detectors scan buckets in
// descending order with canonical tie-breaking, so the result is
// deterministic.
std::optional<Move> find_move(const Graph& g, const CycleCollection& c, const PackConfig& cfg);

// Throws when the move removes cycles absent from c or is a success move
// (those are terminal and never applied).
void apply_move(CycleCollection& c, const Move& m);

// Seeds 1-cycles, then applies moves until at least k cycles of order r
// exist, a success move fires, or no move applies. The potential strictly
// increases along the trace.
PackResult pack(const Graph& g, const PackConfig& cfg);

// Rescans the cheap structural patterns directly (written independently of
// the detectors). Nonempty output on a stuck state indicates a detector
// defect.
std::vector<std::string> claim_guard_findings(const Graph& g, const CycleCollection& c);

std::string certificate_to_json(const PackingCertificate& cert);
PackingCertificate certificate_from_json(const std::string& text);
std::string trace_to_json(const std::vector<TraceEntry>& trace);

}  // namespace cyclepack
