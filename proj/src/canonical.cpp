#include "spex/canonical.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace spex {

std::vector<int> tree_centers(const Graph& t) {
    if (!t.is_tree()) throw std::invalid_argument("tree_centers: not a tree");
    int n = t.order();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};
    std::vector<int> deg(n), layer;
    std::deque<int> q;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) q.push_back(v);
    }
    int remaining = n;
    std::vector<int> last(q.begin(), q.end());
    while (remaining > 2) {
        int cnt = static_cast<int>(q.size());
        remaining -= cnt;
        layer.clear();
        for (int i = 0; i < cnt; ++i) {
            int v = q.front();
            q.pop_front();
            for (int u : t.neighbors(v))
                if (--deg[u] == 1) layer.push_back(u);
        }
        for (int u : layer) q.push_back(u);
        last.assign(q.begin(), q.end());
    }
    std::sort(last.begin(), last.end());
    return last;
}

namespace {

std::string code_below(const Graph& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : t.neighbors(v))
        if (u != parent) child_codes.push_back(code_below(t, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
}

}  // namespace

std::string rooted_code(const Graph& t, int root) {
    return code_below(t, root, -1);
}

CanonicalForm canonical_form(const Graph& t) {
    auto centers = tree_centers(t);
    std::string best = rooted_code(t, centers[0]);
    if (centers.size() == 2) {
        std::string other = rooted_code(t, centers[1]);
        if (other < best) best = std::move(other);
    }
    return CanonicalForm{std::move(best)};
}

}  // namespace spex
