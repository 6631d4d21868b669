#pragma once

#include <string>
#include <vector>

#include "spex/graph.hpp"
#include "spex/matching.hpp"

namespace spex {

// A designated nonempty vertex subset X of a tree.
struct ControlSet {
    Graph tree;
    std::vector<int> vertices;  // sorted
};

// Graph on X whose edges are exactly the quasi-adjacent pairs: u,v in X with
// no third X-vertex on the tree path between them.
struct QuasiAdjacencyGraph {
    ControlSet base;
    Graph graph;                 // on |X| vertices
    std::vector<int> index_map;  // position i of graph <-> base.vertices[i]
};

struct ControlSetDiagnostics {
    int swaps = 0;
    int case_counts[4] = {0, 0, 0, 0};
    std::vector<std::pair<int, int>> distance3_pairs;  // logged before adjustment
};

// Dominating set X of size beta built along Theorem-2.3 lines: quasi-pendant
// vertices all enter X and quasi-adjacent members end up within distance 2.
struct DominatingControlSet {
    ControlSet control;
    Matching witness_matching;
    ControlSetDiagnostics diagnostics;
};

struct ConnectedMatchingDiagnostics {
    std::vector<int> component_counts;  // per loop iteration, starting state first
};

// Spanning tree preserving the matching number: fix a maximum matching and
// repeatedly delete a cycle edge outside it.
Graph spanning_tree_preserving_matching(const Graph& g);

// Maximum matching M of a tree such that T[V(M)] is connected.
Matching connected_maximal_matching(const Graph& t,
                                    ConnectedMatchingDiagnostics* diag = nullptr);

// Requires a tree with n >= 2*beta + 1.
DominatingControlSet dominating_control_set(const Graph& t);

QuasiAdjacencyGraph quasi_adjacency_graph(const ControlSet& cs);

// True iff every 2-connected block induces a complete subgraph.
bool is_clique_block_graph(const Graph& g);

// True iff every cycle's vertex set induces a clique; equivalent to the block
// test, which is how it is evaluated.
bool cycle_clique_check(const QuasiAdjacencyGraph& qg);

}  // namespace spex
