#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

enum class Family {
    T2ab,   // beta = 2
    T1abc, T2abc, T3abc, T4abc,  // beta = 3
    K1, K2, K3, K4, K5, K6, K7, K8, K9, K10, K11, K12, K13,  // beta = 4
};

// Identifier plus nonnegative integer parameters selecting one parametric tree.
struct FamilySpec {
    Family family;
    std::vector<int> params;

    bool operator==(const FamilySpec&) const = default;
};

int family_arity(Family f);
int family_spine_size(Family f);
int family_beta(Family f);
std::string family_name(Family f);

// Lower-bound constraints under which the family realizes its designed beta.
bool spec_params_valid(const FamilySpec& spec);

// Labeled tree of the corresponding figure. Spine vertices come first, in
// path/star order as listed per family in families.cpp, then pendant groups
// attached to their hubs in parameter order.
Graph build_family(const FamilySpec& spec);

// Closed-form (order, beta) without building the graph.
std::pair<int, int> family_order_and_beta(const FamilySpec& spec);

std::string spec_to_string(const FamilySpec& spec);
// Accepts e.g. "K10(4,0,4,4)", "T3(3,1,3)", "T2(2,3)"; T2 is disambiguated
// by arity.
FamilySpec parse_family_spec(const std::string& text);

// Trees asserted extremal by the closed-form case tables.
struct MinimizerPrediction {
    int n = 0;
    int beta = 0;
    std::vector<FamilySpec> trees;  // may contain several exact ties
    int valid_from = 0;             // smallest n the claim is asserted for
};

// Case-table prediction for beta in {2,3,4}. Errors if beta is unsupported or
// a formula parameter comes out negative / violates family bounds.
MinimizerPrediction predicted_minimizer(int n, int beta);

// All valid specs of a given family with the given order.
std::vector<FamilySpec> enumerate_family_specs(Family f, int order);
// All families with the given designed beta.
std::vector<Family> families_with_beta(int beta);

}  // namespace spex
