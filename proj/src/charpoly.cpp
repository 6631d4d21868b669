#include "spex/charpoly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "spex/canonical.hpp"

namespace spex {

namespace {

struct SubtreePolys {
    Poly with_root;     // phi of the subtree
    Poly without_root;  // phi of the subtree minus its root
};

thread_local std::unordered_map<std::string, SubtreePolys> subtree_memo;

// children[v] must list v's children in the rooted tree.
SubtreePolys tree_dp(int v, const std::vector<std::vector<int>>& children,
                     std::vector<std::string>* codes) {
    std::vector<SubtreePolys> kids;
    std::vector<std::string> kid_codes;
    for (int c : children[v]) {
        kids.push_back(tree_dp(c, children, codes));
        if (codes) kid_codes.push_back((*codes)[c]);
    }
    std::string key;
    if (codes) {
        std::sort(kid_codes.begin(), kid_codes.end());
        key = "(";
        for (const auto& s : kid_codes) key += s;
        key += ")";
        (*codes)[v] = key;
        auto it = subtree_memo.find(key);
        if (it != subtree_memo.end()) return it->second;
    }
    SubtreePolys r;
    r.with_root = Poly::monomial(1);
    r.without_root = Poly::constant(1);
    for (const auto& k : kids) {
        Poly a = r.with_root * k.with_root - r.without_root * k.without_root;
        r.without_root = r.without_root * k.with_root;
        r.with_root = std::move(a);
    }
    if (codes) subtree_memo.emplace(std::move(key), r);
    return r;
}

Poly char_poly_rooted(const Graph& t, int root, bool memoize) {
    int n = t.order();
    std::vector<std::vector<int>> children(n);
    std::vector<int> stack{root}, seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : t.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                children[u].push_back(v);
                stack.push_back(v);
            }
    }
    std::vector<std::string> codes;
    if (memoize) codes.resize(n);
    return tree_dp(root, children, memoize ? &codes : nullptr).with_root;
}

Poly faddeev_leverrier(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n, Int(0)));
    for (auto [u, v] : g.edges()) A[u][v] = A[v][u] = 1;
    std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
    std::vector<Int> coefs(n + 1);
    coefs[n] = 1;  // monic, stored lowest degree first at the end
    Int ck = 1;
    for (int k = 1; k <= n; ++k) {
        // M := A*M + c_{k-1} I
        std::vector<std::vector<Int>> AM(n, std::vector<Int>(n, Int(0)));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (A[i][t] == 0) continue;
                for (int j = 0; j < n; ++j) AM[i][j] += M[t][j];
            }
        for (int i = 0; i < n; ++i) AM[i][i] += ck;
        // c_k = -tr(A*AM)/k
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                if (A[i][t] != 0) tr += AM[t][i];
        ck = -tr / k;
        coefs[n - k] = ck;
        M = std::move(AM);
    }
    return Poly(std::move(coefs));
}

}  // namespace

Poly char_poly(const Graph& g) {
    if (g.order() == 0) return Poly::constant(1);
    if (g.is_tree()) {
        int root = tree_centers(g)[0];
        return char_poly_rooted(g, root, true);
    }
    bool forest = true;
    Poly out = Poly::constant(1);
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        if (!sub.is_tree()) {
            forest = false;
            break;
        }
        out = out * char_poly_rooted(sub, tree_centers(sub)[0], true);
    }
    if (forest) return out;
    return faddeev_leverrier(g);
}

Poly char_poly_tree(const std::vector<int>& parent) {
    int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> children(n);
    for (int v = 1; v < n; ++v) children[parent[v]].push_back(v);
    // parent[i] < i, so processing in decreasing order is bottom-up
    std::vector<SubtreePolys> dp(n);
    for (int v = n - 1; v >= 0; --v) {
        SubtreePolys r;
        r.with_root = Poly::monomial(1);
        r.without_root = Poly::constant(1);
        for (int c : children[v]) {
            Poly a = r.with_root * dp[c].with_root - r.without_root * dp[c].without_root;
            r.without_root = r.without_root * dp[c].with_root;
            r.with_root = std::move(a);
        }
        dp[v] = std::move(r);
    }
    return dp[0].with_root;
}

}  // namespace spex
