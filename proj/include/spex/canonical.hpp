#pragma once

#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Total-order key for unlabeled trees: equal codes iff isomorphic.
struct CanonicalForm {
    std::string code;

    auto operator<=>(const CanonicalForm&) const = default;
};

// One or two centers of a tree (vertices of minimum eccentricity), sorted.
std::vector<int> tree_centers(const Graph& t);

// AHU parenthesis code of t rooted at `root`.
std::string rooted_code(const Graph& t, int root);

// AHU encoding rooted at the center; for bicentral trees the smaller of the
// two rooted codes is used. Errors if t is not a tree.
CanonicalForm canonical_form(const Graph& t);

}  // namespace spex
