#include "spex/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace spex {

bool Matching::covers(int v) const {
    return std::binary_search(covered.begin(), covered.end(), v);
}

bool Matching::valid_for(const Graph& g) const {
    std::vector<char> used(g.order(), 0);
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    std::vector<int> cov;
    for (int v = 0; v < g.order(); ++v)
        if (used[v]) cov.push_back(v);
    return cov == covered;
}

Matching make_matching(const Graph& g, std::vector<Edge> edges) {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    Matching m;
    m.edges = std::move(edges);
    for (auto [u, v] : m.edges) {
        m.covered.push_back(u);
        m.covered.push_back(v);
    }
    std::sort(m.covered.begin(), m.covered.end());
    if (!m.valid_for(g)) throw std::invalid_argument("make_matching: not a matching of g");
    return m;
}

namespace {

// Post-order greedy: matching a free leaf to its free parent is always safe
// in a forest, and yields a maximum matching.
std::vector<Edge> forest_matching(const Graph& g) {
    int n = g.order();
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int v : g.neighbors(u))
                if (parent[v] == -2) {
                    parent[v] = u;
                    stack.push_back(v);
                }
        }
    }
    std::vector<char> used(n, 0);
    std::vector<Edge> out;
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i], p = parent[v];
        if (p >= 0 && !used[v] && !used[p]) {
            used[v] = used[p] = 1;
            out.emplace_back(v, p);
        }
    }
    return out;
}

struct Augmenter {
    const Graph& g;
    std::vector<int> mate;       // -1 if free
    std::vector<char> on_path;

    explicit Augmenter(const Graph& g_) : g(g_), mate(g_.order(), -1), on_path(g_.order(), 0) {}

    // Backtracking search over simple alternating paths starting at a free
    // vertex; exact in general graphs at the cost of worst-case exponential
    // time, which is fine at this problem scale.
    bool augment_from(int v, std::vector<int>& path) {
        on_path[v] = 1;
        path.push_back(v);
        for (int u : g.neighbors(v)) {
            if (on_path[u]) continue;
            if (mate[u] == -1) {
                path.push_back(u);
                return true;  // augmenting path found
            }
            int w = mate[u];
            if (on_path[w]) continue;
            on_path[u] = 1;
            path.push_back(u);
            if (augment_from(w, path)) return true;
            path.pop_back();
            on_path[u] = 0;
        }
        path.pop_back();
        on_path[v] = 0;
        return false;
    }

    void run() {
        for (auto [u, v] : g.edges())
            if (mate[u] == -1 && mate[v] == -1) {
                mate[u] = v;
                mate[v] = u;
            }
        bool grew = true;
        while (grew) {
            grew = false;
            for (int r = 0; r < g.order(); ++r) {
                if (mate[r] != -1) continue;
                std::vector<int> path;
                std::fill(on_path.begin(), on_path.end(), 0);
                if (augment_from(r, path)) {
                    for (size_t i = 0; i + 1 < path.size(); i += 2) {
                        mate[path[i]] = path[i + 1];
                        mate[path[i + 1]] = path[i];
                    }
                    grew = true;
                }
            }
        }
    }
};

bool is_forest(const Graph& g) {
    // acyclic iff m = n - #components
    return g.size() == g.order() - static_cast<int>(g.components().size());
}

}  // namespace

Matching maximum_matching(const Graph& g) {
    if (is_forest(g)) return make_matching(g, forest_matching(g));
    Augmenter aug(g);
    aug.run();
    std::vector<Edge> es;
    for (int v = 0; v < g.order(); ++v)
        if (aug.mate[v] > v) es.emplace_back(v, aug.mate[v]);
    return make_matching(g, es);
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

}  // namespace spex
