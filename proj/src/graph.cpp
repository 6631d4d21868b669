#include "spex/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spex {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v)
        throw std::invalid_argument("add_edge: self-loop");
    if (has_edge(u, v))
        throw std::invalid_argument("add_edge: parallel edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    es.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

bool Graph::is_connected() const {
    if (order() == 0) return true;
    auto d = distances_from(0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

bool Graph::is_tree() const {
    return order() >= 1 && edge_count_ == order() - 1 && is_connected();
}

std::vector<int> Graph::distances_from(int src) const {
    std::vector<int> dist(order(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj_[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

int Graph::distance(int u, int v) const { return distances_from(u)[v]; }

std::vector<int> Graph::tree_path(int u, int v) const {
    std::vector<int> parent(order(), -1), dist(order(), -1);
    std::deque<int> q{u};
    dist[u] = 0;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        if (a == v) break;
        for (int b : adj_[a])
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                parent[b] = a;
                q.push_back(b);
            }
    }
    if (dist[v] < 0) throw std::invalid_argument("tree_path: vertices not connected");
    std::vector<int> path;
    for (int a = v; a != -1; a = parent[a]) path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(order(), 0);
    for (int s = 0; s < order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> idx(order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(verts.size()));
    for (int u : verts)
        for (int v : adj_[u])
            if (idx[v] >= 0 && u < v) g.add_edge(idx[u], idx[v]);
    return g;
}

Graph Graph::without_vertex(int v) const {
    std::vector<int> keep;
    keep.reserve(order() - 1);
    for (int u = 0; u < order(); ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("without_edge: not an edge");
    Graph g(order());
    for (int a = 0; a < order(); ++a)
        for (int b : adj_[a])
            if (a < b && !(a == std::min(u, v) && b == std::max(u, v))) g.add_edge(a, b);
    return g;
}

std::vector<int> Graph::leaves() const {
    std::vector<int> ls;
    for (int v = 0; v < order(); ++v)
        if (degree(v) == 1) ls.push_back(v);
    return ls;
}

std::vector<int> quasi_pendant_vertices(const Graph& t) {
    if (!t.is_tree() || t.order() < 2)
        throw std::invalid_argument("quasi_pendant_vertices: need a tree with n >= 2");
    std::vector<char> mark(t.order(), 0);
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1) mark[t.neighbors(v)[0]] = 1;
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

Graph parse_graph_text(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("graph text: missing header 'n m'");
    if (n < 0 || m < 0) throw std::invalid_argument("graph text: negative header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph text: missing edge line");
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph_text(in);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

int edge_distance(const Graph& t, Edge e1, Edge e2) {
    if (!t.has_edge(e1.first, e1.second) || !t.has_edge(e2.first, e2.second))
        throw std::invalid_argument("edge_distance: edge not in tree");
    auto d1 = t.distances_from(e1.first);
    auto d2 = t.distances_from(e1.second);
    int best = std::min({d1[e2.first], d1[e2.second], d2[e2.first], d2[e2.second]});
    return best;
}

int edge_set_distance(const Graph& t, const std::vector<Edge>& E1, const std::vector<Edge>& E2) {
    if (E1.empty() || E2.empty())
        throw std::invalid_argument("edge_set_distance: empty edge set");
    int best = -1;
    for (const auto& e1 : E1)
        for (const auto& e2 : E2) {
            int d = edge_distance(t, e1, e2);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

}  // namespace spex
