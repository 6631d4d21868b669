#include "spex/families.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace spex {

namespace {

struct FamilyInfo {
    const char* name;
    int arity;
    int spine;
    int beta;
    // spine edges as index pairs, and the spine index carrying each group
    std::vector<std::pair<int, int>> edges;
    std::vector<int> hubs;
};

// Spine layouts. Vertices 0..spine-1; pendant groups a,b,c,d attach to
// hubs[0..arity-1] and occupy indices spine, spine+1, ... in group order.
const FamilyInfo& info(Family f) {
    static const std::array<FamilyInfo, 18> table = {{
        {"T2", 2, 3, 2, {{0, 1}, {1, 2}}, {0, 2}},
        {"T1", 3, 3, 3, {{0, 1}, {1, 2}}, {0, 1, 2}},
        {"T2", 3, 4, 3, {{0, 1}, {1, 2}, {2, 3}}, {0, 2, 3}},
        {"T3", 3, 5, 3, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0, 2, 4}},
        {"T4", 3, 4, 3, {{0, 1}, {1, 2}, {1, 3}}, {0, 2, 3}},
        {"K1", 4, 4, 4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1, 2, 3}},
        {"K2", 4, 5, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0, 2, 3, 4}},
        {"K3", 4, 5, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {0, 1, 3, 4}},
        {"K4", 4, 6, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, {0, 2, 4, 5}},
        {"K5", 4, 6, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}, {0, 2, 3, 5}},
        {"K6", 4, 7, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, {0, 2, 4, 6}},
        {"K7", 4, 4, 4, {{0, 1}, {1, 2}, {1, 3}}, {0, 1, 2, 3}},
        {"K8", 4, 5, 4, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, {0, 2, 3, 4}},
        {"K9", 4, 6, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, {0, 2, 4, 5}},
        {"K10", 4, 7, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}, {0, 2, 4, 6}},
        {"K11", 4, 5, 4, {{0, 4}, {1, 4}, {2, 4}, {2, 3}}, {0, 1, 2, 3}},
        {"K12", 4, 6, 4, {{0, 4}, {1, 4}, {2, 4}, {2, 5}, {5, 3}}, {0, 1, 2, 3}},
        {"K13", 4, 5, 4, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, {0, 1, 2, 3}},
    }};
    return table[static_cast<size_t>(f)];
}

const std::array<Family, 18> all_families = {
    Family::T2ab, Family::T1abc, Family::T2abc, Family::T3abc, Family::T4abc,
    Family::K1, Family::K2, Family::K3, Family::K4, Family::K5, Family::K6,
    Family::K7, Family::K8, Family::K9, Family::K10, Family::K11, Family::K12,
    Family::K13};

}  // namespace

int family_arity(Family f) { return info(f).arity; }
int family_spine_size(Family f) { return info(f).spine; }
int family_beta(Family f) { return info(f).beta; }
std::string family_name(Family f) { return info(f).name; }

bool spec_params_valid(const FamilySpec& spec) {
    const auto& p = spec.params;
    if (static_cast<int>(p.size()) != family_arity(spec.family)) return false;
    for (int v : p)
        if (v < 0) return false;
    switch (spec.family) {
        case Family::T2ab: return p[0] + p[1] >= 1;
        case Family::T1abc: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1;
        case Family::T2abc: return p[0] >= 1 && p[2] >= 1;
        case Family::T3abc: return p[0] + p[1] + p[2] >= 1;
        case Family::T4abc: return p[0] >= 1 && p[1] >= 1;
        case Family::K1: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K2: return p[0] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K3: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K4: return p[0] >= 1 && p[3] >= 1;
        case Family::K5: return p[0] >= 1 && p[3] >= 1;
        case Family::K6: return p[0] >= 1 && p[3] >= 1;
        case Family::K7: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K8: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K9: return p[0] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K10: return p[0] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K11: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[3] >= 1;
        case Family::K12:
            return (p[0] >= 1 || p[1] >= 1) && (p[0] + p[1] >= 2 || p[2] + p[3] >= 1);
        case Family::K13: {
            int zeros = 0;
            for (int v : p) zeros += (v == 0);
            return zeros <= 1;
        }
    }
    return false;
}

Graph build_family(const FamilySpec& spec) {
    if (!spec_params_valid(spec))
        throw std::invalid_argument("build_family: invalid parameters for " +
                                    spec_to_string(spec));
    const auto& fi = info(spec.family);
    int total = fi.spine;
    for (int v : spec.params) total += v;
    Graph g(total);
    for (auto [u, v] : fi.edges) g.add_edge(u, v);
    int next = fi.spine;
    for (int gi = 0; gi < fi.arity; ++gi)
        for (int j = 0; j < spec.params[gi]; ++j) g.add_edge(fi.hubs[gi], next++);
    return g;
}

std::pair<int, int> family_order_and_beta(const FamilySpec& spec) {
    if (!spec_params_valid(spec))
        throw std::invalid_argument("family_order_and_beta: invalid parameters");
    int order = family_spine_size(spec.family);
    for (int v : spec.params) order += v;
    return {order, family_beta(spec.family)};
}

std::string spec_to_string(const FamilySpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << '(';
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (i) os << ',';
        os << spec.params[i];
    }
    os << ')';
    return os.str();
}

FamilySpec parse_family_spec(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw std::invalid_argument("family spec: expected NAME(p1,p2,...): " + text);
    std::string name = text.substr(0, open);
    std::vector<int> params;
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        params.push_back(v);
    }
    for (Family f : all_families) {
        if (family_name(f) == name && family_arity(f) == static_cast<int>(params.size()))
            return FamilySpec{f, params};
    }
    throw std::invalid_argument("family spec: unknown family/arity: " + text);
}

MinimizerPrediction predicted_minimizer(int n, int beta) {
    MinimizerPrediction out;
    out.n = n;
    out.beta = beta;
    auto push = [&](Family f, std::vector<int> params) {
        for (int v : params)
            if (v < 0)
                throw std::invalid_argument("predicted_minimizer: formula parameter negative at n=" +
                                            std::to_string(n));
        FamilySpec spec{f, std::move(params)};
        if (!spec_params_valid(spec))
            throw std::invalid_argument("predicted_minimizer: formula parameters outside family bounds at n=" +
                                        std::to_string(n));
        out.trees.push_back(std::move(spec));
    };
    if (beta == 2) {
        out.valid_from = 4;
        int a = (n - 3) / 2, b = (n - 3) - a;
        push(Family::T2ab, {a, b});
    } else if (beta == 3) {
        out.valid_from = 11;
        int m = n - 5;
        if (m < 0) throw std::invalid_argument("predicted_minimizer: n too small for beta=3");
        int s = m / 3, r = m % 3;
        if (r == 0) push(Family::T3abc, {s + 1, s - 2, s + 1});
        else if (r == 1) push(Family::T3abc, {s + 1, s - 1, s + 1});
        else push(Family::T3abc, {s + 1, s, s + 1});
    } else if (beta == 4) {
        out.valid_from = 19;
        int m = n - 7;
        if (m < 0) throw std::invalid_argument("predicted_minimizer: n too small for beta=4");
        int s = m / 4, r = m % 4;
        if (r == 0) {
            push(Family::K6, {s + 1, s - 1, s - 1, s + 1});
            push(Family::K10, {s + 1, s - 3, s + 1, s + 1});
        } else if (r == 1) {
            push(Family::K10, {s + 1, s - 2, s + 1, s + 1});
        } else if (r == 2) {
            push(Family::K6, {s + 1, s, s, s + 1});
            push(Family::K6, {s + 2, s - 1, s, s + 1});
            push(Family::K6, {s + 2, s - 1, s - 1, s + 2});
        } else {
            push(Family::K10, {s + 2, s - 3, s + 2, s + 2});
        }
    } else {
        throw std::invalid_argument("predicted_minimizer: beta must be 2, 3 or 4");
    }
    return out;
}

std::vector<FamilySpec> enumerate_family_specs(Family f, int order) {
    std::vector<FamilySpec> out;
    int arity = family_arity(f);
    int total = order - family_spine_size(f);
    if (total < 0) return out;
    std::vector<int> p(arity, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == arity - 1) {
            p[i] = rem;
            FamilySpec spec{f, p};
            if (spec_params_valid(spec)) out.push_back(spec);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            p[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<Family> families_with_beta(int beta) {
    std::vector<Family> out;
    for (Family f : all_families)
        if (family_beta(f) == beta) out.push_back(f);
    return out;
}

}  // namespace spex
