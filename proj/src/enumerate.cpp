#include "spex/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "spex/canonical.hpp"

namespace spex {

TreeEnumerator::TreeEnumerator(int n, std::optional<int> filter_beta)
    : n_(n), beta_(filter_beta) {
    if (n < 1 || n > max_supported_order)
        throw std::invalid_argument("TreeEnumerator: order out of supported range");
    if (beta_ && (*beta_ < 0 || *beta_ > n / 2))
        throw std::invalid_argument("TreeEnumerator: no tree has that matching number");
    cap_ = beta_ ? 2 * (*beta_) + 1 : n;
    levels_.resize(n);
    for (int i = 0; i < n; ++i) levels_[i] = i + 1;  // the path
}

void TreeEnumerator::successor_at(int p) {
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1) --q;
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
}

bool TreeEnumerator::advance_rooted() {
    if (exhausted_) return false;
    if (fresh_) {
        fresh_ = false;
    } else {
        int p = n_ - 1;
        while (p > 0 && levels_[p] <= 2) --p;
        if (p == 0) {
            exhausted_ = true;
            return false;
        }
        successor_at(p);
    }
    // skip any prefix that exceeds the level cap
    while (true) {
        int f = -1;
        for (int i = 0; i < n_; ++i)
            if (levels_[i] > cap_) {
                f = i;
                break;
            }
        if (f < 0) return true;
        successor_at(f);
    }
}

int tree_matching_number(const std::vector<int>& parent) {
    int n = static_cast<int>(parent.size());
    std::vector<char> used(n, 0);
    int count = 0;
    for (int v = n - 1; v >= 1; --v) {
        int p = parent[v];
        if (!used[v] && !used[p]) {
            used[v] = used[p] = 1;
            ++count;
        }
    }
    return count;
}

Graph graph_from_parents(const std::vector<int>& parent) {
    Graph g(static_cast<int>(parent.size()));
    for (size_t v = 1; v < parent.size(); ++v) g.add_edge(static_cast<int>(v), parent[v]);
    return g;
}

namespace {

std::vector<int> canon_seq_below(const Graph& t, int v, int par, int depth) {
    std::vector<std::vector<int>> blocks;
    for (int u : t.neighbors(v))
        if (u != par) blocks.push_back(canon_seq_below(t, u, v, depth + 1));
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a > b; });
    std::vector<int> out{depth};
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

std::vector<int> canonical_level_sequence(const Graph& t, int root) {
    return canon_seq_below(t, root, -1, 1);
}

bool TreeEnumerator::keep_current(std::vector<int>& parent) const {
    parent.assign(n_, -1);
    std::vector<int> last_at_level(n_ + 2, -1);
    last_at_level[1] = 0;
    for (int i = 1; i < n_; ++i) {
        parent[i] = last_at_level[levels_[i] - 1];
        last_at_level[levels_[i]] = i;
    }
    if (beta_ && tree_matching_number(parent) != *beta_) return false;

    Graph t = graph_from_parents(parent);
    auto centers = tree_centers(t);
    if (std::find(centers.begin(), centers.end(), 0) == centers.end()) return false;
    if (centers.size() == 2) {
        int other = centers[0] == 0 ? centers[1] : centers[0];
        auto alt = canonical_level_sequence(t, other);
        if (std::lexicographical_compare(levels_.begin(), levels_.end(), alt.begin(), alt.end()))
            return false;  // the other center carries this free tree
    }
    return true;
}

bool TreeEnumerator::next(std::vector<int>& parent) {
    while (advance_rooted()) {
        if (keep_current(parent)) {
            ++emitted_;
            return true;
        }
    }
    return false;
}

}  // namespace spex
