#include "cyclepack/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cyclepack {

void Graph::add_vertex(VertexId v) {
    adj_.try_emplace(v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++num_edges_;
    }
}

bool Graph::has_vertex(VertexId v) const {
    return adj_.count(v) > 0;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
}

std::size_t Graph::degree(VertexId v) const {
    return neighbors(v).size();
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nbrs] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges_);
    for (const auto& [v, nbrs] : adj_)
        for (VertexId w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

GraphStats stats(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("stats: empty graph");
    GraphStats s;
    s.n = g.num_vertices();
    s.m = g.num_edges();
    s.average_degree = Rat(2 * static_cast<long long>(s.m), static_cast<long long>(s.n));
    s.min_degree = g.num_vertices();
    for (VertexId v : g.vertices()) s.min_degree = std::min(s.min_degree, g.degree(v));
    for (const auto& [u, v] : g.edges()) {
        std::size_t c = common_neighbors(g, u, v).size();
        if (!s.min_common_neighbors || c < *s.min_common_neighbors)
            s.min_common_neighbors = c;
    }
    return s;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph delete_vertex(Graph g, VertexId v) {
    const auto nbrs = g.neighbors(v);  // copy; also validates v
    Graph out;
    for (VertexId u : g.vertices())
        if (u != v) out.add_vertex(u);
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v) out.add_edge(a, b);
    return out;
}

Graph contract_edge(Graph g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: not an edge: " + std::to_string(u) + " " +
                                    std::to_string(v));
    VertexId keep = std::min(u, v);
    VertexId drop = std::max(u, v);
    Graph out;
    for (VertexId w : g.vertices())
        if (w != drop) out.add_vertex(w);
    for (const auto& [a, b] : g.edges()) {
        VertexId x = (a == drop) ? keep : a;
        VertexId y = (b == drop) ? keep : b;
        if (x != y) out.add_edge(x, y);
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        std::string rest;
        if (!(ls >> a)) {
            ls.clear();
            if (ls >> rest)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected a vertex id, got \"" + rest + "\"");
            continue;  // blank or comment-only line
        }
        if (ls >> b) {
            if (ls >> rest)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": trailing tokens");
            g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        } else {
            ls.clear();
            if (ls >> rest)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": expected a vertex id, got \"" + rest + "\"");
            g.add_vertex(static_cast<VertexId>(a));
        }
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    for (VertexId v : g.vertices())
        if (g.degree(v) == 0) out << v << "\n";
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

std::string format_rat(const Rat& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace cyclepack
