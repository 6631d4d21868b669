#pragma once

#include <vector>

#include "spex/graph.hpp"
#include "spex/polynomial.hpp"

namespace spex {

// Certified enclosure of the largest root of a real-rooted polynomial:
// the root lies in (lo, hi], and exactly `count_above_lo` roots exceed lo.
struct RootEnclosure {
    Dyadic lo, hi;
    int count_above_lo = 1;

    double width() const { return hi.to_double() - lo.to_double(); }
    double mid() const { return 0.5 * (lo.to_double() + hi.to_double()); }
};

// Fourier sequence (p, p', p'', ...) of a real-rooted polynomial; the sign
// variation count at x equals the number of roots strictly above x.
class FourierSeq {
public:
    explicit FourierSeq(const Poly& p);

    int roots_above(const Dyadic& x) const;
    const Poly& poly() const { return ders_[0]; }
    int degree() const { return ders_[0].degree(); }

private:
    std::vector<Poly> ders_;
};

// Bisect down to width <= 2^-prec_bits. If simple_top is set, additionally
// refines until exactly one root lies above lo (requires the largest root to
// be simple, as it is for connected graphs).
RootEnclosure isolate_largest_root(const FourierSeq& fs, int prec_bits, bool simple_top);

void refine_enclosure(const FourierSeq& fs, RootEnclosure& e, int prec_bits);

// Exact three-way comparison of the largest roots of two real-rooted
// polynomials whose enclosures were produced with simple_top. Returns
// -1 / 0 / +1; 0 only when a shared factor certifies an exact tie.
int compare_largest_roots(const FourierSeq& fa, RootEnclosure& ea,
                          const FourierSeq& fb, RootEnclosure& eb);

// Numeric spectral radius with certified absolute error bound.
struct SpectralValue {
    double rho = 0.0;
    double tol = 0.0;
    Dyadic lo, hi;
};

// Largest adjacency eigenvalue; disconnected graphs are handled by taking the
// max over components. tol must be >= 1e-13.
SpectralValue spectral_radius(const Graph& g, double tol = 1e-12);

int tol_to_bits(double tol);

}  // namespace spex
