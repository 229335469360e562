#include "cyclepack/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace cyclepack {

namespace {

using Mask = std::uint64_t;

struct Searcher {
    int k = 0;
    int r = 0;
    std::vector<Mask> adj;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
    bool exceeded = false;
    std::vector<int> path;
    std::vector<std::vector<int>> chosen;

    bool tick() {
        if (++nodes > max_nodes) exceeded = true;
        return !exceeded;
    }

    // Extends a simple path rooted at its minimum vertex path[0]. Closes a
    // cycle whenever the path is long enough and returns to the root; the
    // constraint path[1] < path.back() discards the reversed traversal.
    bool grow(Mask free, int need, std::size_t max_len) {
        if (!tick()) return false;
        int root = path[0];
        int last = path.back();
        if (path.size() >= static_cast<std::size_t>(r) && (adj[last] >> root & 1) &&
            path[1] < last) {
            chosen.push_back(path);
            if (cover(free, need - 1)) return true;
            chosen.pop_back();
        }
        if (path.size() >= max_len) return false;
        for (Mask ext = adj[last] & free; ext; ext &= ext - 1) {
            int w = std::countr_zero(ext);
            path.push_back(w);
            if (grow(free & ~(Mask{1} << w), need, max_len)) return true;
            path.pop_back();
        }
        return false;
    }

    bool cover(Mask avail, int need) {
        if (need == 0) return true;
        if (!tick()) return false;
        if (std::popcount(avail) < need * r) return false;
        int v = std::countr_zero(avail);
        Mask rest = avail & ~(Mask{1} << v);
        std::size_t max_len = std::popcount(avail) - static_cast<std::size_t>(need - 1) * r;
        std::vector<int> saved = std::move(path);  // grow above us still needs its path
        path.assign(1, v);
        if (grow(rest, need, max_len)) return true;
        path = std::move(saved);
        if (exceeded) return false;
        return cover(rest, need);  // v lies on no cycle of the packing
    }
};

}  // namespace

OracleResult exact_pack(const Graph& g, int k, int r, const OracleBudget& budget) {
    if (k < 1) throw std::invalid_argument("exact_pack: k >= 1 required");
    if (r < 3) throw std::invalid_argument("exact_pack: r >= 3 required");
    if (budget.max_vertices > 64)
        throw std::invalid_argument("exact_pack: max_vertices capped at 64");

    OracleResult result;
    if (g.num_vertices() > budget.max_vertices) {
        result.status = OracleStatus::BudgetExceeded;
        return result;
    }

    std::vector<VertexId> label = g.vertices();
    std::map<VertexId, int> dense;
    for (std::size_t i = 0; i < label.size(); ++i) dense[label[i]] = static_cast<int>(i);

    Searcher s;
    s.k = k;
    s.r = r;
    s.max_nodes = budget.max_nodes;
    s.adj.assign(label.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        s.adj[dense[u]] |= Mask{1} << dense[v];
        s.adj[dense[v]] |= Mask{1} << dense[u];
    }

    Mask all = label.size() == 64 ? ~Mask{0} : (Mask{1} << label.size()) - 1;
    bool found = s.cover(all, k);
    result.nodes = s.nodes;
    if (found) {
        result.status = OracleStatus::Yes;
        for (const auto& dense_cycle : s.chosen) {
            Cycle c;
            for (int idx : dense_cycle) c.push_back(label[idx]);
            result.cycles.push_back(canonical_cycle(std::move(c)));
        }
    } else {
        result.status = s.exceeded ? OracleStatus::BudgetExceeded : OracleStatus::No;
    }
    return result;
}

}  // namespace cyclepack
