#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace spex {

using Edge = std::pair<int, int>;

// Undirected simple graph on dense vertex indices 0..n-1.
// Neighbor lists are kept sorted; construction is the only mutation phase,
// after which a Graph is treated as an immutable value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool is_tree() const;

    // BFS distances from src; -1 for unreachable vertices.
    std::vector<int> distances_from(int src) const;
    int distance(int u, int v) const;

    // Unique path between u and v; requires a tree. Includes both endpoints.
    std::vector<int> tree_path(int u, int v) const;

    // Connected components as vertex lists, each sorted ascending.
    std::vector<std::vector<int>> components() const;

    // Subgraph induced by `verts`; vertices are re-indexed in the order given.
    Graph induced(const std::vector<int>& verts) const;

    Graph without_vertex(int v) const;
    Graph without_edge(int u, int v) const;

    std::vector<int> leaves() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Vertices adjacent to at least one degree-1 vertex. Requires a tree, n >= 2.
std::vector<int> quasi_pendant_vertices(const Graph& t);

// Text format: first line "n m", then m lines "u v" (0-based).
Graph parse_graph_text(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);

// min over endpoint pairs of tree distance; errors if e1/e2 not edges of t.
int edge_distance(const Graph& t, Edge e1, Edge e2);
// min over e1 in E1, e2 in E2 of edge_distance; errors on empty sets.
int edge_set_distance(const Graph& t, const std::vector<Edge>& E1, const std::vector<Edge>& E2);

}  // namespace spex
