#include "cyclepack/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cyclepack {

Cycle canonical_cycle(Cycle c) {
    if (c.empty()) throw std::invalid_argument("canonical_cycle: empty sequence");
    std::set<VertexId> seen(c.begin(), c.end());
    if (seen.size() != c.size())
        throw std::invalid_argument("canonical_cycle: repeated vertex");
    if (c.size() <= 2) {
        std::sort(c.begin(), c.end());
        return c;
    }
    std::size_t n = c.size();
    std::size_t at = std::min_element(c.begin(), c.end()) - c.begin();
    Cycle out;
    out.reserve(n);
    VertexId fwd = c[(at + 1) % n];
    VertexId bwd = c[(at + n - 1) % n];
    if (fwd <= bwd) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(c[(at + i) % n]);
    } else {
        for (std::size_t i = 0; i < n; ++i) out.push_back(c[(at + n - i) % n]);
    }
    return out;
}

std::string format_potential(const Potential& p) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
        if (i > 0) out << ", ";
        out << p.counts[i];
    }
    out << ")";
    return out.str();
}

CycleCollection::CycleCollection(int r) : r_(r) {
    if (r < 3) throw std::invalid_argument("CycleCollection: r >= 3 required");
    for (int i = 1; i <= r; ++i) buckets_[i];
}

void CycleCollection::insert(Cycle c) {
    c = canonical_cycle(std::move(c));
    int order = static_cast<int>(c.size());
    if (order > r_)
        throw std::invalid_argument("CycleCollection::insert: order " + std::to_string(order) +
                                    " exceeds cap " + std::to_string(r_));
    for (VertexId v : c)
        if (owner_.count(v))
            throw std::invalid_argument("CycleCollection::insert: vertex " + std::to_string(v) +
                                        " already covered");
    for (VertexId v : c) owner_[v] = c;
    buckets_[order].insert(std::move(c));
}

void CycleCollection::erase(const Cycle& c) {
    Cycle canon = canonical_cycle(c);
    auto bucket_it = buckets_.find(static_cast<int>(canon.size()));
    if (bucket_it == buckets_.end() || !bucket_it->second.count(canon))
        throw std::invalid_argument("CycleCollection::erase: cycle not present");
    for (VertexId v : canon) owner_.erase(v);
    bucket_it->second.erase(canon);
}

bool CycleCollection::contains(const Cycle& c) const {
    Cycle canon = canonical_cycle(c);
    auto it = buckets_.find(static_cast<int>(canon.size()));
    return it != buckets_.end() && it->second.count(canon) > 0;
}

const std::set<Cycle>& CycleCollection::bucket(int order) const {
    auto it = buckets_.find(order);
    if (it == buckets_.end())
        throw std::invalid_argument("CycleCollection::bucket: order out of range");
    return it->second;
}

std::vector<Cycle> CycleCollection::all_cycles() const {
    std::vector<Cycle> out;
    for (const auto& [order, bucket] : buckets_)
        for (const Cycle& c : bucket) out.push_back(c);
    return out;
}

std::size_t CycleCollection::cycle_count() const {
    std::size_t total = 0;
    for (const auto& [order, bucket] : buckets_) total += bucket.size();
    return total;
}

std::size_t CycleCollection::covered_vertices() const {
    return owner_.size();
}

std::optional<Cycle> CycleCollection::cycle_containing(VertexId v) const {
    auto it = owner_.find(v);
    if (it == owner_.end()) return std::nullopt;
    return it->second;
}

Potential potential(const CycleCollection& c) {
    Potential p;
    p.counts.reserve(c.order_cap());
    for (int order = c.order_cap(); order >= 1; --order)
        p.counts.push_back(static_cast<long long>(c.bucket(order).size()));
    return p;
}

ValidationReport validate(const CycleCollection& c, const Graph& g, bool require_spanning) {
    ValidationReport report;
    auto complain = [&report](const std::string& s) { report.problems.push_back(s); };

    std::set<VertexId> covered;
    for (int order = 1; order <= c.order_cap(); ++order) {
        for (const Cycle& cyc : c.bucket(order)) {
            if (static_cast<int>(cyc.size()) != order)
                complain("bucket " + std::to_string(order) + " holds a cycle of order " +
                         std::to_string(cyc.size()));
            for (VertexId v : cyc) {
                if (!g.has_vertex(v))
                    complain("cycle uses unknown vertex " + std::to_string(v));
                if (!covered.insert(v).second)
                    complain("vertex " + std::to_string(v) + " covered twice");
            }
            if (cyc.size() == 2 && !g.has_edge(cyc[0], cyc[1]))
                complain("pair " + std::to_string(cyc[0]) + "," + std::to_string(cyc[1]) +
                         " is not an edge");
            if (cyc.size() >= 3) {
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    VertexId u = cyc[i];
                    VertexId v = cyc[(i + 1) % cyc.size()];
                    if (!g.has_edge(u, v))
                        complain("missing cycle edge " + std::to_string(u) + " " +
                                 std::to_string(v));
                }
            }
        }
    }
    if (require_spanning)
        for (VertexId v : g.vertices())
            if (!covered.count(v))
                complain("vertex " + std::to_string(v) + " not covered");
    return report;
}

CycleCollection seed_collection(const Graph& g, int r) {
    CycleCollection c(r);
    for (VertexId v : g.vertices()) c.insert({v});
    return c;
}

std::string collection_to_json(const CycleCollection& c) {
    nlohmann::json j;
    j["r"] = c.order_cap();
    j["cycles"] = nlohmann::json::array();
    for (const Cycle& cyc : c.all_cycles()) j["cycles"].push_back(cyc);
    return j.dump();
}

CycleCollection collection_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("collection json: ") + e.what());
    }
    if (!j.contains("r") || !j.contains("cycles"))
        throw std::invalid_argument("collection json: expected keys \"r\" and \"cycles\"");
    try {
        CycleCollection c(j.at("r").get<int>());
        for (const auto& item : j.at("cycles")) c.insert(item.get<Cycle>());
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("collection json: ") + e.what());
    }
}

}  // namespace cyclepack
