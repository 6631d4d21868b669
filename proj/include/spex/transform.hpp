#pragma once

#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Insert a new vertex of degree 2 in place of edge (u, v); order grows by 1.
Graph subdivide_edge(const Graph& g, int u, int v);

// Edge on a path between branch vertices: both sides of the split contain a
// vertex of degree >= 3. Subdividing such an edge lowers the spectral radius
// except on the W graph below.
bool is_internal_edge(const Graph& t, int u, int v);

// The exception graph of the subdivision lemma: a path with two extra pendant
// vertices attached at each quasi-pendant end (two degree-3 vertices, each
// adjacent to exactly two leaves, all else a bare path).
bool is_w_graph(const Graph& t);

// Two pendant paths hang at vertex v, identified by their leaf tips; moves
// one vertex from the donor path to the recipient path (k, l) -> (k+1, l-1).
Graph pendant_path_shift(const Graph& g, int v, int recipient_leaf, int donor_leaf);

// Deletes one pendant leaf at `from` and attaches a new leaf at `to`.
Graph pendant_move(const Graph& g, int from, int to);

// Rewires edges v-w to u-w for each w in ws; ws must avoid N(u) and u itself.
Graph rewire_neighbors(const Graph& g, int u, int v, const std::vector<int>& ws);

// Pendant paths attached at v as (leaf tip, length) pairs, longest first.
std::vector<std::pair<int, int>> pendant_paths_at(const Graph& g, int v);

}  // namespace spex
