#pragma once

#include <cstdint>
#include <vector>

#include "spex/canonical.hpp"
#include "spex/families.hpp"
#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

// Result of the exhaustive spectral minimization over trees with fixed
// (order, matching number).
struct ExtremalResult {
    int n = 0;
    int beta = 0;
    std::uint64_t tree_count = 0;  // trees with this (n, beta)
    SpectralValue min_rho;

    struct Member {
        CanonicalForm form;
        std::vector<FamilySpec> family_matches;
    };
    std::vector<Member> argmin;    // sorted by canonical code
    bool ties_certified = false;   // gcd-certified exact equality when |argmin| > 1
};

// Exhaustive argmin of the spectral radius over all trees with matching
// number beta on n vertices. Candidates that provably exceed the current
// champion (one exact sign evaluation) are discarded early; survivors are
// compared with certified enclosures, ties by exact common-factor analysis.
// The result is identical for every worker count.
ExtremalResult argmin_spectral(int n, int beta, int workers = 1, double tol = 1e-12);

// Family specs of designed beta whose tree is isomorphic to the given form.
std::vector<FamilySpec> match_families(const CanonicalForm& form, int n, int beta);

}  // namespace spex
