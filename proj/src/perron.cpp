#include "spex/perron.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spex {

PerronVector perron_vector(const Graph& g, double tol) {
    if (!g.is_connected() || g.order() == 0)
        throw std::invalid_argument("perron_vector: graph must be connected and nonempty");
    int n = g.order();
    PerronVector pv;
    if (n == 1) {
        pv.entries = {1.0};
        return pv;
    }
    std::vector<double> x(n, 1.0), y(n);
    // iterate with A + I; shifting keeps bipartite graphs from oscillating
    for (int it = 1; it <= 2000000; ++it) {
        for (int v = 0; v < n; ++v) {
            double s = x[v];
            for (int u : g.neighbors(v)) s += x[u];
            y[v] = s;
        }
        double mx = *std::max_element(y.begin(), y.end());
        double diff = 0.0;
        for (int v = 0; v < n; ++v) {
            y[v] /= mx;
            diff = std::max(diff, std::fabs(y[v] - x[v]));
        }
        x.swap(y);
        pv.iterations = it;
        if (diff < tol / 10.0) break;
    }
    // Rayleigh quotient of the final iterate
    double num = 0.0, den = 0.0;
    for (int v = 0; v < n; ++v) {
        double s = 0.0;
        for (int u : g.neighbors(v)) s += x[u];
        num += s * x[v];
        den += x[v] * x[v];
    }
    pv.rho = num / den;
    double resid = 0.0;
    for (int v = 0; v < n; ++v) {
        double s = 0.0;
        for (int u : g.neighbors(v)) s += x[u];
        resid = std::max(resid, std::fabs(s - pv.rho * x[v]));
    }
    pv.entries = std::move(x);
    pv.tol = resid;
    return pv;
}

}  // namespace spex
