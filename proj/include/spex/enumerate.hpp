#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Streams every unlabeled free tree on n vertices exactly once, optionally
// restricted to a given matching number.
//
// Rooted level sequences are generated in decreasing lexicographic order by
// the classic constant-amortized-time successor (decrement the last entry
// above 2, then tile the preceding block), and an occurrence is kept only
// when its root is a center of the underlying free tree; for bicentral trees
// the lexicographically larger of the two center-rooted canonical sequences
// is the keeper. No global dedup table, O(n) memory.
//
// With a beta filter, any matching number beta forces every root-distance to
// stay below 2*beta + 1, so offending level-sequence prefixes are skipped
// wholesale before the exact per-tree beta check.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int n, std::optional<int> filter_beta = std::nullopt);

    // Parent array of the next tree in stream order (parent[0] == -1,
    // parent[i] < i). Returns false when the stream is exhausted.
    bool next(std::vector<int>& parent);

    std::uint64_t emitted() const { return emitted_; }
    int order() const { return n_; }
    std::optional<int> filter_beta() const { return beta_; }

    static constexpr int max_supported_order = 22;

private:
    int n_;
    std::optional<int> beta_;
    int cap_;
    std::vector<int> levels_;
    bool exhausted_ = false;
    bool fresh_ = true;
    std::uint64_t emitted_ = 0;

    bool advance_rooted();
    void successor_at(int p);
    bool keep_current(std::vector<int>& parent) const;
};

// Matching number of a tree in parent-array form (leaf-to-parent greedy).
int tree_matching_number(const std::vector<int>& parent);

Graph graph_from_parents(const std::vector<int>& parent);

// Canonical (lexicographically maximal) level sequence rooted at `root`.
std::vector<int> canonical_level_sequence(const Graph& t, int root);

}  // namespace spex
