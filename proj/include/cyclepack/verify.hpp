#pragma once

#include <string>
#include <vector>

#include "cyclepack/engine.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

struct VerifyReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Checks a packing certificate against the graph using adjacency queries
// only: at least k cycles, each of order >= max(r, 3) with distinct vertices
// and consecutive pairs (wrap included) joined by edges, and no vertex shared
// between cycles. Written independently of the search code on purpose.
VerifyReport verify_certificate(const Graph& g, const PackingCertificate& cert);

}  // namespace cyclepack
