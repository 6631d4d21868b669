#pragma once

#include <vector>

#include "spex/graph.hpp"

namespace spex {

// A set of pairwise non-adjacent edges together with the covered vertex set.
struct Matching {
    std::vector<Edge> edges;    // each pair (u, v) with u < v, sorted
    std::vector<int> covered;   // sorted union of endpoints

    int size() const { return static_cast<int>(edges.size()); }
    bool covers(int v) const;
    bool valid_for(const Graph& g) const;
};

Matching make_matching(const Graph& g, std::vector<Edge> edges);

// Maximum matching size. Linear-time leaf DP for trees/forests, exhaustive
// alternating-path augmentation otherwise (exact; intended for n <= 24).
int matching_number(const Graph& g);

Matching maximum_matching(const Graph& g);

}  // namespace spex
