#include "spex/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace spex {

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide_edge: not an edge");
    Graph h(g.order() + 1);
    int mid = g.order();
    for (auto [a, b] : g.edges())
        if (!(a == std::min(u, v) && b == std::max(u, v))) h.add_edge(a, b);
    h.add_edge(u, mid);
    h.add_edge(mid, v);
    return h;
}

bool is_internal_edge(const Graph& t, int u, int v) {
    if (!t.has_edge(u, v)) throw std::invalid_argument("is_internal_edge: not an edge");
    Graph cut = t.without_edge(u, v);
    auto du = cut.distances_from(u);
    bool side_u = false, side_v = false;
    for (int w = 0; w < t.order(); ++w) {
        if (t.degree(w) < 3) continue;
        (du[w] >= 0 ? side_u : side_v) = true;
    }
    return side_u && side_v;
}

bool is_w_graph(const Graph& t) {
    if (!t.is_tree() || t.order() < 6) return false;
    std::vector<int> deg3;
    for (int v = 0; v < t.order(); ++v) {
        int d = t.degree(v);
        if (d == 3) deg3.push_back(v);
        else if (d > 3) return false;
    }
    if (deg3.size() != 2) return false;
    for (int v : deg3) {
        int leaf_nbrs = 0;
        for (int u : t.neighbors(v)) leaf_nbrs += (t.degree(u) == 1);
        if (leaf_nbrs != 2) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> pendant_paths_at(const Graph& g, int v) {
    std::vector<std::pair<int, int>> out;
    for (int u : g.neighbors(v)) {
        // follow the chain of degree-2 vertices away from v
        int prev = v, cur = u, len = 1;
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        if (g.degree(cur) == 1) out.emplace_back(cur, len);
    }
    std::sort(out.begin(), out.end(),
              [](auto a, auto b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
    return out;
}

Graph pendant_path_shift(const Graph& g, int v, int recipient_leaf, int donor_leaf) {
    auto paths = pendant_paths_at(g, v);
    int klen = -1, llen = -1;
    for (auto [leaf, len] : paths) {
        if (leaf == recipient_leaf) klen = len;
        if (leaf == donor_leaf) llen = len;
    }
    if (recipient_leaf == donor_leaf)
        throw std::invalid_argument("pendant_path_shift: paths must be distinct");
    if (klen < 0 || llen < 0)
        throw std::invalid_argument("pendant_path_shift: leaves do not end pendant paths at v");
    if (llen < 1 || klen < llen)
        throw std::invalid_argument("pendant_path_shift: need recipient length >= donor length >= 1");
    // remove the donor tip, extend the recipient tip
    Graph h(g.order());
    for (auto [a, b] : g.edges()) {
        if (a == std::min(donor_leaf, g.neighbors(donor_leaf)[0]) &&
            b == std::max(donor_leaf, g.neighbors(donor_leaf)[0]))
            continue;
        h.add_edge(a, b);
    }
    h.add_edge(recipient_leaf, donor_leaf);  // reuse the donor vertex as the new tip
    return h;
}

Graph pendant_move(const Graph& g, int from, int to) {
    int leaf = -1;
    for (int u : g.neighbors(from))
        if (g.degree(u) == 1) {
            leaf = u;
            break;
        }
    if (leaf < 0) throw std::invalid_argument("pendant_move: no pendant leaf at source");
    if (to == leaf) throw std::invalid_argument("pendant_move: target is the moved leaf");
    Graph h(g.order());
    for (auto [a, b] : g.edges())
        if (!(a == std::min(leaf, from) && b == std::max(leaf, from))) h.add_edge(a, b);
    h.add_edge(to, leaf);
    return h;
}

Graph rewire_neighbors(const Graph& g, int u, int v, const std::vector<int>& ws) {
    if (ws.empty()) throw std::invalid_argument("rewire_neighbors: empty vertex list");
    for (int w : ws) {
        if (!g.has_edge(v, w))
            throw std::invalid_argument("rewire_neighbors: w not adjacent to v");
        if (w == u || g.has_edge(u, w))
            throw std::invalid_argument("rewire_neighbors: w must avoid u and N(u)");
    }
    Graph h(g.order());
    std::vector<Edge> drop;
    for (int w : ws) drop.emplace_back(std::min(v, w), std::max(v, w));
    std::sort(drop.begin(), drop.end());
    for (auto [a, b] : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), Edge{a, b})) h.add_edge(a, b);
    for (int w : ws) h.add_edge(u, w);
    return h;
}

}  // namespace spex
