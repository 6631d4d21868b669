#pragma once

#include <vector>

#include "spex/graph.hpp"

namespace spex {

// Positive eigenvector of the spectral radius, normalized to unit max entry.
struct PerronVector {
    std::vector<double> entries;
    double rho = 0.0;      // Rayleigh estimate from the final iterate
    double tol = 0.0;      // residual bound: ||A x - rho x||_inf <= tol
    int iterations = 0;
};

// Power iteration on A + I with the deterministic all-ones start; errors on
// disconnected graphs. Stops when successive normalized iterates differ by
// less than tol/10 in the infinity norm.
PerronVector perron_vector(const Graph& g, double tol = 1e-12);

}  // namespace spex
