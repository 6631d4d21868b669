#include "spex/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spex {

namespace {

std::vector<int> find_cycle(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0), parent(n, -1);
    std::vector<int> cycle;
    auto dfs = [&](auto&& self, int u, int par) -> bool {
        color[u] = 1;
        for (int v : g.neighbors(u)) {
            if (v == par) continue;
            if (color[v] == 1) {
                for (int a = u; a != v; a = parent[a]) cycle.push_back(a);
                cycle.push_back(v);
                return true;
            }
            if (color[v] == 0) {
                parent[v] = u;
                if (self(self, v, u)) return true;
            }
        }
        color[u] = 2;
        return false;
    };
    for (int s = 0; s < n; ++s)
        if (color[s] == 0 && dfs(dfs, s, -1)) return cycle;
    return {};
}

}  // namespace

Graph spanning_tree_preserving_matching(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("spanning_tree_preserving_matching: graph disconnected");
    Matching m = maximum_matching(g);
    std::set<Edge> matched(m.edges.begin(), m.edges.end());
    Graph h = g;
    while (true) {
        auto cycle = find_cycle(h);
        if (cycle.empty()) break;
        Edge victim{-1, -1};
        for (size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            Edge e{std::min(u, v), std::max(u, v)};
            if (!matched.count(e) && (victim.first < 0 || e < victim)) victim = e;
        }
        if (victim.first < 0)
            throw std::logic_error("spanning_tree_preserving_matching: cycle inside matching");
        h = h.without_edge(victim.first, victim.second);
    }
    return h;
}

namespace {

std::vector<std::vector<int>> induced_components(const Graph& t, const std::vector<int>& verts) {
    std::set<int> inset(verts.begin(), verts.end());
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (int s : verts) {
        if (seen.count(s)) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen.insert(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int v : t.neighbors(u))
                if (inset.count(v) && !seen.count(v)) {
                    seen.insert(v);
                    q.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<Edge> component_edges(const Graph& t, const std::vector<int>& comp) {
    std::set<int> inset(comp.begin(), comp.end());
    std::vector<Edge> es;
    for (int u : comp)
        for (int v : t.neighbors(u))
            if (u < v && inset.count(v)) es.emplace_back(u, v);
    return es;
}

}  // namespace

Matching connected_maximal_matching(const Graph& t, ConnectedMatchingDiagnostics* diag) {
    if (!t.is_tree() || t.order() < 2)
        throw std::invalid_argument("connected_maximal_matching: need a tree with n >= 2");
    Matching m = maximum_matching(t);
    int beta = m.size();
    for (int iter = 0; iter <= beta + 1; ++iter) {
        auto comps = induced_components(t, m.covered);
        if (diag) diag->component_counts.push_back(static_cast<int>(comps.size()));
        if (comps.size() <= 1) return m;
        if (iter == beta + 1) break;
        // largest component; ties to the one with smallest minimum vertex
        size_t li = 0;
        for (size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() > comps[li].size() ||
                (comps[i].size() == comps[li].size() && comps[i][0] < comps[li][0]))
                li = i;
        const auto& tl = comps[li];
        std::set<int> in_tl(tl.begin(), tl.end());
        auto tl_edges = component_edges(t, tl);

        int best_d = -1;
        Edge best_edge{-1, -1};
        for (const auto& e : m.edges) {
            if (in_tl.count(e.first)) continue;  // matching edges inside T_l
            int d = edge_set_distance(t, tl_edges, {e});
            if (best_d < 0 || d < best_d) {
                best_d = d;
                best_edge = e;
            }
        }
        if (best_d != 2) {
            std::ostringstream os;
            os << "connected_maximal_matching: nearest outside edge at distance " << best_d
               << " (expected 2) in tree:\n" << graph_to_text(t);
            throw std::logic_error(os.str());
        }
        // realizing pair: smallest T_l vertex at distance 2 from an endpoint of
        // best_edge; in a tree at most one endpoint can be at distance 2 from it
        auto du = t.distances_from(best_edge.first);
        auto dv = t.distances_from(best_edge.second);
        int vt = -1, vprime = -1;
        for (int x : tl) {
            if (du[x] != 2 && dv[x] != 2) continue;
            int endpoint = du[x] == 2 ? best_edge.first : best_edge.second;
            if (vprime < 0 || x < vprime) {
                vprime = x;
                vt = endpoint;
            }
        }
        if (vt < 0)
            throw std::logic_error("connected_maximal_matching: no realizing pair at distance 2");
        auto path = t.tree_path(vprime, vt);  // [v', w1, vt]
        int w1 = path[1];
        if (m.covers(w1))
            throw std::logic_error("connected_maximal_matching: connector vertex already covered");
        int ut = best_edge.first == vt ? best_edge.second : best_edge.first;
        std::vector<Edge> edges = m.edges;
        edges.erase(std::find(edges.begin(), edges.end(),
                              Edge{std::min(ut, vt), std::max(ut, vt)}));
        edges.emplace_back(std::min(w1, vt), std::max(w1, vt));
        m = make_matching(t, std::move(edges));
    }
    throw std::logic_error("connected_maximal_matching: did not converge");
}

namespace {

bool has_w_neighbor(const Graph& t, int v, const std::vector<char>& in_u) {
    for (int u : t.neighbors(v))
        if (!in_u[u]) return true;
    return false;
}

std::vector<int> quasi_adjacent_of(const Graph& t, int v, const std::set<int>& X) {
    std::vector<int> out;
    for (int u : X) {
        if (u == v) continue;
        auto path = t.tree_path(v, u);
        bool blocked = false;
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (X.count(path[i])) {
                blocked = true;
                break;
            }
        if (!blocked) out.push_back(u);
    }
    return out;
}

}  // namespace

DominatingControlSet dominating_control_set(const Graph& t) {
    if (!t.is_tree())
        throw std::invalid_argument("dominating_control_set: not a tree");
    Matching m = connected_maximal_matching(t);
    int n = t.order(), beta = m.size();
    if (n < 2 * beta + 1)
        throw std::invalid_argument("dominating_control_set: n < 2*beta + 1");

    std::vector<char> in_u(n, 0);
    for (int v : m.covered) in_u[v] = 1;
    for (int w = 0; w < n; ++w) {
        if (in_u[w]) continue;
        if (t.degree(w) != 1 || !in_u[t.neighbors(w)[0]])
            throw std::logic_error("dominating_control_set: uncovered vertex is not a pendant of U");
    }

    // orientation: the X endpoint is the one with leaf neighbors outside U;
    // if neither has any, prefer the partner of a pendant endpoint, else the
    // smaller index
    std::set<int> X;
    std::map<int, int> partner;
    for (auto [p, q] : m.edges) {
        bool pw = has_w_neighbor(t, p, in_u), qw = has_w_neighbor(t, q, in_u);
        if (pw && qw)
            throw std::logic_error("dominating_control_set: both matched endpoints see W");
        int x;
        if (pw) x = p;
        else if (qw) x = q;
        else if (t.degree(p) == 1) x = q;
        else if (t.degree(q) == 1) x = p;
        else x = std::min(p, q);
        int y = x == p ? q : p;
        X.insert(x);
        partner[x] = y;
        partner[y] = x;
    }

    for (int qv : quasi_pendant_vertices(t))
        if (!X.count(qv))
            throw std::logic_error("dominating_control_set: quasi-pendant vertex missed by orientation");

    DominatingControlSet out;
    auto& diag = out.diagnostics;

    auto do_swap = [&](int member) {
        int other = partner[member];
        X.erase(member);
        X.insert(other);
        ++diag.swaps;
        return other;
    };

    // pick the start vertex: smallest X member adjacent to W
    int start = -1;
    for (int v : X)
        if (has_w_neighbor(t, v, in_u)) {
            start = v;
            break;
        }
    if (start < 0)
        throw std::logic_error("dominating_control_set: no X member adjacent to W");

    std::set<int> processed{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int pivot = queue.front();
        queue.pop_front();
        while (true) {
            auto qa = quasi_adjacent_of(t, pivot, X);
            auto dist = t.distances_from(pivot);
            int cand = -1;
            for (int v : qa) {
                if (processed.count(v)) continue;
                if (cand < 0 || dist[v] < dist[cand] || (dist[v] == dist[cand] && v < cand))
                    cand = v;
            }
            if (cand < 0) break;
            int d = dist[cand];
            if (d > 3) {
                std::ostringstream os;
                os << "dominating_control_set: quasi-adjacent pair at distance " << d
                   << " in tree:\n" << graph_to_text(t);
                throw std::logic_error(os.str());
            }
            int placed = cand;
            if (d == 1) {
                if (!has_w_neighbor(t, cand, in_u)) {
                    ++diag.case_counts[0];
                    if (t.degree(partner[cand]) != 1) placed = do_swap(cand);
                } else {
                    ++diag.case_counts[1];
                }
            } else if (d == 2) {
                ++diag.case_counts[2];
            } else {
                ++diag.case_counts[3];
                diag.distance3_pairs.emplace_back(pivot, cand);
                // select a distance-3 member whose path is pivot - x1 - u_t - v_t
                // with u_t the matching partner of v_t
                int sel = -1;
                for (int v : qa) {
                    if (processed.count(v) || dist[v] != 3) continue;
                    auto path = t.tree_path(pivot, v);
                    if (!X.count(path[1]) && !X.count(path[2]) && partner[v] == path[2]) {
                        if (sel < 0 || v < sel) sel = v;
                    }
                }
                if (sel < 0)
                    throw std::logic_error(
                        "dominating_control_set: no swappable distance-3 quasi-adjacent vertex in tree:\n" +
                        graph_to_text(t));
                if (has_w_neighbor(t, sel, in_u))
                    throw std::logic_error(
                        "dominating_control_set: distance-3 member has leaf neighbors in tree:\n" +
                        graph_to_text(t));
                placed = do_swap(sel);
            }
            processed.insert(placed);
            queue.push_back(placed);
        }
    }

    // contract checks
    std::vector<int> xs(X.begin(), X.end());
    if (static_cast<int>(xs.size()) != beta)
        throw std::logic_error("dominating_control_set: |X| != beta");
    for (int qv : quasi_pendant_vertices(t))
        if (!X.count(qv))
            throw std::logic_error("dominating_control_set: Q not contained in final X");
    for (int v = 0; v < n; ++v) {
        if (X.count(v)) continue;
        bool dominated = false;
        for (int u : t.neighbors(v))
            if (X.count(u)) {
                dominated = true;
                break;
            }
        if (!dominated)
            throw std::logic_error("dominating_control_set: X not dominating in tree:\n" +
                                   graph_to_text(t));
    }
    for (int v : xs)
        for (int u : quasi_adjacent_of(t, v, X))
            if (t.distance(v, u) > 2)
                throw std::logic_error(
                    "dominating_control_set: final quasi-adjacent pair beyond distance 2 in tree:\n" +
                    graph_to_text(t));

    out.control = ControlSet{t, xs};
    out.witness_matching = std::move(m);
    return out;
}

QuasiAdjacencyGraph quasi_adjacency_graph(const ControlSet& cs) {
    if (!cs.tree.is_tree() || cs.vertices.empty())
        throw std::invalid_argument("quasi_adjacency_graph: need a tree and nonempty X");
    std::set<int> X(cs.vertices.begin(), cs.vertices.end());
    QuasiAdjacencyGraph out;
    out.base = cs;
    out.index_map = cs.vertices;
    int k = static_cast<int>(cs.vertices.size());
    Graph q(k);
    for (int i = 0; i < k; ++i) {
        auto qa = quasi_adjacent_of(cs.tree, cs.vertices[i], X);
        for (int u : qa) {
            int j = static_cast<int>(std::lower_bound(cs.vertices.begin(), cs.vertices.end(), u) -
                                     cs.vertices.begin());
            if (j > i) q.add_edge(i, j);
        }
    }
    out.graph = std::move(q);
    return out;
}

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& g_) : g(g_), disc(g_.order(), -1), low(g_.order(), 0) {}

    void dfs(int u, int parent_edge_to) {
        disc[u] = low[u] = timer++;
        for (int v : g.neighbors(u)) {
            if (v == parent_edge_to) continue;
            if (disc[v] == -1) {
                stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<Edge> blk;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == Edge{u, v}) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }

    void run() {
        for (int s = 0; s < g.order(); ++s)
            if (disc[s] == -1) dfs(s, -1);
    }
};

}  // namespace

bool is_clique_block_graph(const Graph& g) {
    BlockFinder bf(g);
    bf.run();
    for (const auto& blk : bf.blocks) {
        std::set<int> verts;
        for (auto [u, v] : blk) {
            verts.insert(u);
            verts.insert(v);
        }
        size_t k = verts.size();
        if (blk.size() != k * (k - 1) / 2) return false;
        for (int a : verts)
            for (int b : verts)
                if (a < b && !g.has_edge(a, b)) return false;
    }
    return true;
}

bool cycle_clique_check(const QuasiAdjacencyGraph& qg) {
    return is_clique_block_graph(qg.graph);
}

}  // namespace spex
