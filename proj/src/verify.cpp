#include "cyclepack/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cyclepack {

namespace {

std::string cycle_label(std::size_t index) { return "cycle " + std::to_string(index); }

}  // namespace

VerifyReport verify_certificate(const Graph& g, const PackingCertificate& cert) {
    VerifyReport report;
    if (cert.k < 1) report.problems.push_back("k must be at least 1");
    if (cert.r < 3) report.problems.push_back("r must be at least 3");
    if (cert.cycles.size() < static_cast<std::size_t>(std::max(cert.k, 0)))
        report.problems.push_back("expected at least " + std::to_string(cert.k) +
                                  " cycles, found " + std::to_string(cert.cycles.size()));

    std::size_t min_order = static_cast<std::size_t>(std::max(cert.r, 3));
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < cert.cycles.size(); ++i) {
        const Cycle& c = cert.cycles[i];
        if (c.size() < min_order) {
            report.problems.push_back(cycle_label(i) + " has order " + std::to_string(c.size()) +
                                      ", need at least " + std::to_string(min_order));
            continue;
        }
        std::set<VertexId> own(c.begin(), c.end());
        if (own.size() != c.size()) {
            report.problems.push_back(cycle_label(i) + " repeats a vertex");
            continue;
        }
        bool vertices_ok = true;
        for (VertexId v : c) {
            if (!g.has_vertex(v)) {
                report.problems.push_back(cycle_label(i) + " uses unknown vertex " +
                                          std::to_string(v));
                vertices_ok = false;
            }
        }
        if (!vertices_ok) continue;
        for (std::size_t j = 0; j < c.size(); ++j) {
            VertexId u = c[j];
            VertexId v = c[(j + 1) % c.size()];
            if (!g.has_edge(u, v))
                report.problems.push_back(cycle_label(i) + " needs missing edge " +
                                          std::to_string(u) + "," + std::to_string(v));
        }
        for (VertexId v : c) {
            if (seen.count(v))
                report.problems.push_back("vertex " + std::to_string(v) +
                                          " appears in two cycles");
            seen.insert(v);
        }
    }
    return report;
}

}  // namespace cyclepack
