#include "cyclepack/minimalize.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace cyclepack {

namespace {

// deg(v) <= d/2 = m/n, compared without division.
bool deletion_keeps_average(std::size_t n, std::size_t m, std::size_t deg) {
    return static_cast<unsigned long long>(n) * deg <= m;
}

// |N(u) cap N(v)| <= d/2 - 1, i.e. n*(c+1) <= m.
bool contraction_keeps_average(std::size_t n, std::size_t m, std::size_t c) {
    return static_cast<unsigned long long>(n) * (c + 1) <= m;
}

// BFS shortest path inside the subgraph induced on `allowed`; neighbor
// expansion follows sorted adjacency, so the result is deterministic.
std::vector<VertexId> induced_path(const Graph& g, const std::set<VertexId>& allowed,
                                   VertexId from, VertexId to) {
    std::map<VertexId, VertexId> parent;
    parent[from] = from;
    std::deque<VertexId> queue{from};
    while (!queue.empty() && !parent.count(to)) {
        VertexId at = queue.front();
        queue.pop_front();
        for (VertexId next : g.neighbors(at)) {
            if (!allowed.count(next) || parent.count(next)) continue;
            parent[next] = at;
            queue.push_back(next);
        }
    }
    if (!parent.count(to))
        throw std::logic_error("lift_packing: branch set not connected");
    std::vector<VertexId> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

MinimalizeResult minimalize(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("minimalize: empty graph");

    Graph cur = g;
    ContractionHistory history;
    for (VertexId v : g.vertices()) history.branch_sets[v] = {v};
    Rat original_d = stats(g).average_degree;

    while (true) {
        std::size_t n = cur.num_vertices();
        std::size_t m = cur.num_edges();

        if (n >= 2) {
            std::optional<std::pair<std::size_t, VertexId>> pick;  // (degree, id)
            for (VertexId v : cur.vertices()) {
                std::size_t deg = cur.degree(v);
                if (!deletion_keeps_average(n, m, deg)) continue;
                if (!pick || std::pair(deg, v) < *pick) pick = {deg, v};
            }
            if (pick) {
                VertexId v = pick->second;
                history.steps.push_back({HistoryStep::Kind::Delete, v, 0});
                history.branch_sets.erase(v);
                cur = delete_vertex(std::move(cur), v);
                continue;
            }
        }

        std::optional<std::tuple<std::size_t, VertexId, VertexId>> pick;
        for (const auto& [u, v] : cur.edges()) {
            std::size_t c = common_neighbors(cur, u, v).size();
            if (!contraction_keeps_average(n, m, c)) continue;
            if (!pick || std::tuple(c, u, v) < *pick) pick = {c, u, v};
        }
        if (!pick) break;
        auto [c, u, v] = *pick;
        history.steps.push_back({HistoryStep::Kind::Contract, u, v});
        auto& kept = history.branch_sets[std::min(u, v)];
        auto dropped = history.branch_sets.extract(std::max(u, v));
        kept.insert(dropped.mapped().begin(), dropped.mapped().end());
        cur = contract_edge(std::move(cur), u, v);
    }

    MinimalizeResult result{std::move(cur), std::move(history), original_d, Rat()};
    result.final_average_degree = stats(result.minor).average_degree;
    return result;
}

Graph replay_history(const Graph& original, const std::vector<HistoryStep>& steps) {
    Graph cur = original;
    for (const HistoryStep& step : steps) {
        if (step.kind == HistoryStep::Kind::Delete)
            cur = delete_vertex(std::move(cur), step.a);
        else
            cur = contract_edge(std::move(cur), step.a, step.b);
    }
    return cur;
}

std::vector<Cycle> lift_packing(const Graph& original, const ContractionHistory& history,
                                const std::vector<Cycle>& minor_cycles) {
    Graph minor = replay_history(original, history.steps);

    std::set<VertexId> used;
    for (const Cycle& c : minor_cycles) {
        if (c.size() < 3) throw std::invalid_argument("lift_packing: cycles need order >= 3");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!minor.has_edge(c[i], c[(i + 1) % c.size()]))
                throw std::invalid_argument("lift_packing: not a cycle of the minor");
            if (!used.insert(c[i]).second)
                throw std::invalid_argument("lift_packing: cycles are not disjoint");
        }
    }

    std::vector<Cycle> lifted;
    for (const Cycle& c : minor_cycles) {
        std::size_t len = c.size();
        std::vector<const std::set<VertexId>*> branch(len);
        for (std::size_t i = 0; i < len; ++i) {
            auto it = history.branch_sets.find(c[i]);
            if (it == history.branch_sets.end())
                throw std::invalid_argument("lift_packing: vertex " + std::to_string(c[i]) +
                                            " has no branch set");
            branch[i] = &it->second;
        }

        // Smallest crossing edge (exit from branch i, entry into branch i+1).
        std::vector<VertexId> exit(len), entry(len);
        for (std::size_t i = 0; i < len; ++i) {
            std::size_t j = (i + 1) % len;
            std::optional<std::pair<VertexId, VertexId>> best;
            for (VertexId a : *branch[i]) {
                for (VertexId b : original.neighbors(a)) {
                    if (!branch[j]->count(b)) continue;
                    if (!best || std::pair(a, b) < *best) best = {a, b};
                }
            }
            if (!best) throw std::logic_error("lift_packing: no edge between adjacent branch sets");
            exit[i] = best->first;
            entry[j] = best->second;
        }

        Cycle out;
        for (std::size_t i = 0; i < len; ++i) {
            auto segment = induced_path(original, *branch[i], entry[i], exit[i]);
            out.insert(out.end(), segment.begin(), segment.end());
        }
        lifted.push_back(canonical_cycle(std::move(out)));
    }
    return lifted;
}

std::string format_history(const ContractionHistory& h) {
    std::ostringstream out;
    for (const HistoryStep& step : h.steps) {
        if (step.kind == HistoryStep::Kind::Delete)
            out << "D " << step.a << "\n";
        else
            out << "C " << step.a << " " << step.b << "\n";
    }
    for (const auto& [minor_vertex, members] : h.branch_sets) {
        out << "B " << minor_vertex << ":";
        for (VertexId v : members) out << " " << v;
        out << "\n";
    }
    return out.str();
}

ContractionHistory parse_history(const std::string& text) {
    ContractionHistory h;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto bad = [&lineno](const std::string& why) {
            return std::invalid_argument("history line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "D") {
            VertexId v;
            if (!(ls >> v)) throw bad("expected vertex after D");
            h.steps.push_back({HistoryStep::Kind::Delete, v, 0});
        } else if (tag == "C") {
            VertexId u, v;
            if (!(ls >> u >> v)) throw bad("expected two vertices after C");
            h.steps.push_back({HistoryStep::Kind::Contract, u, v});
        } else if (tag == "B") {
            std::string id_token;
            if (!(ls >> id_token) || id_token.back() != ':') throw bad("expected \"B <id>:\"");
            VertexId minor_vertex = std::stoi(id_token.substr(0, id_token.size() - 1));
            auto& members = h.branch_sets[minor_vertex];
            VertexId v;
            while (ls >> v) members.insert(v);
            if (members.empty()) throw bad("empty branch set");
        } else {
            throw bad("unknown tag \"" + tag + "\"");
        }
    }
    return h;
}

}  // namespace cyclepack
