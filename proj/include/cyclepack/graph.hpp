#pragma once

#include <boost/rational.hpp>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cyclepack {

using VertexId = int;
using Rat = boost::rational<long long>;

// Undirected simple graph over stable integer vertex ids.
// Adjacency sets are kept sorted so every traversal order is deterministic.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v);
    // Inserts missing endpoints. Rejects self-loops.
    void add_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    bool empty() const { return adj_.empty(); }

    std::size_t degree(VertexId v) const;
    const std::set<VertexId>& neighbors(VertexId v) const;

    std::vector<VertexId> vertices() const;
    // Pairs (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::size_t num_edges_ = 0;
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    Rat average_degree;                          // 2m/n, reduced
    std::size_t min_degree = 0;
    std::optional<std::size_t> min_common_neighbors;  // over edges; absent when m == 0
};

// Throws std::invalid_argument on the empty graph.
GraphStats stats(const Graph& g);

// Sorted ascending. Throws on unknown endpoints.
std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

Graph delete_vertex(Graph g, VertexId v);

// Contracts edge uv; the smaller id survives and absorbs the union of
// neighborhoods. Throws when uv is not an edge.
Graph contract_edge(Graph g, VertexId u, VertexId v);

// Text edge lists: one "u v" pair per line, '#' starts a comment,
// a single token declares an isolated vertex.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

std::string format_rat(const Rat& x);

}  // namespace cyclepack
