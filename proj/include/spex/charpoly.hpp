#pragma once

#include <vector>

#include "spex/graph.hpp"
#include "spex/polynomial.hpp"

namespace spex {

// Exact characteristic polynomial of the adjacency matrix.
//
// Trees are decomposed edge by edge through
//   phi(GuvH) = phi(G) phi(H) - phi(G-u) phi(H-v)
// applied bottom-up from the leaves, with subtree results memoized per thread
// keyed on rooted canonical codes. Other graphs go through exact integer
// Faddeev-LeVerrier.
Poly char_poly(const Graph& g);

// Fast path used by the enumerator: tree given as a parent array
// (parent[0] == -1, parent[i] < i). No memoization.
Poly char_poly_tree(const std::vector<int>& parent);

}  // namespace spex
