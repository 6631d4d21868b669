#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spex/charpoly.hpp"

namespace spex {

FourierSeq::FourierSeq(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("FourierSeq: zero polynomial");
    ders_.push_back(p);
    while (ders_.back().degree() > 0) ders_.push_back(derivative(ders_.back()));
}

int FourierSeq::roots_above(const Dyadic& x) const {
    int variations = 0, prev = 0;
    for (const auto& d : ders_) {
        int s = sign_at(d, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

namespace {

int max_root_bound_int(const Poly& p) {
    // Cauchy bound: 1 + max |c_i| / |lead|, rounded up to an integer
    Int lead = boost::multiprecision::abs(p.leading());
    Int mx = 0;
    for (const auto& v : p.c) mx = std::max(mx, boost::multiprecision::abs(v));
    Int bound = 1 + (mx + lead - 1) / lead;
    return static_cast<int>(bound);
}

}  // namespace

RootEnclosure isolate_largest_root(const FourierSeq& fs, int prec_bits, bool simple_top) {
    RootEnclosure e;
    e.lo = Dyadic{Int(-1), 0};
    e.hi = Dyadic{Int(max_root_bound_int(fs.poly())), 0};
    int above_lo = fs.roots_above(e.lo);
    if (above_lo == 0)
        throw std::invalid_argument("isolate_largest_root: no roots above -1");
    if (fs.roots_above(e.hi) != 0)
        throw std::logic_error("isolate_largest_root: root bound too small");
    e.count_above_lo = above_lo;
    refine_enclosure(fs, e, prec_bits);
    if (simple_top) {
        int extra = prec_bits;
        while (e.count_above_lo != 1) {
            extra += 16;
            if (extra > 512)
                throw std::logic_error("isolate_largest_root: largest root not simple");
            refine_enclosure(fs, e, extra);
        }
    }
    return e;
}

void refine_enclosure(const FourierSeq& fs, RootEnclosure& e, int prec_bits) {
    // stop once hi - lo <= 2^-prec_bits
    while (true) {
        Dyadic width{(e.hi.num << e.lo.k) - (e.lo.num << e.hi.k), e.hi.k + e.lo.k};
        Dyadic target{Int(1), prec_bits};
        if (width <= target) break;
        Dyadic m = midpoint(e.lo, e.hi);
        int above = fs.roots_above(m);
        if (above == 0) {
            e.hi = std::move(m);
        } else {
            e.lo = std::move(m);
            e.count_above_lo = above;
        }
    }
}

int compare_largest_roots(const FourierSeq& fa, RootEnclosure& ea,
                          const FourierSeq& fb, RootEnclosure& eb) {
    if (ea.count_above_lo != 1 || eb.count_above_lo != 1)
        throw std::invalid_argument("compare_largest_roots: enclosures must isolate a simple top root");
    Poly g = poly_gcd(fa.poly(), fb.poly());
    bool can_tie = g.degree() >= 1;
    FourierSeq fg(can_tie ? g : Poly::constant(1));
    int bits = std::max({32, ea.lo.k, eb.lo.k});
    while (true) {
        if (ea.hi <= eb.lo) return -1;
        if (eb.hi <= ea.lo) return 1;
        if (can_tie) {
            // a shared root inside the overlap is the largest root of both
            Dyadic a = eb.lo < ea.lo ? ea.lo : eb.lo;
            Dyadic b = ea.hi < eb.hi ? ea.hi : eb.hi;
            if (fg.roots_above(a) - fg.roots_above(b) >= 1) return 0;
        }
        bits += 32;
        if (bits > 4096)
            throw std::logic_error("compare_largest_roots: failed to separate or certify tie");
        refine_enclosure(fa, ea, bits);
        refine_enclosure(fb, eb, bits);
    }
}

int tol_to_bits(double tol) {
    int bits = static_cast<int>(std::ceil(std::log2(1.0 / tol))) + 1;
    return std::max(bits, 4);
}

SpectralValue spectral_radius(const Graph& g, double tol) {
    if (tol < 1e-13) throw std::invalid_argument("spectral_radius: tol below supported precision");
    if (g.order() == 0) throw std::invalid_argument("spectral_radius: empty graph");
    int bits = tol_to_bits(tol);
    Dyadic best_lo{Int(-2), 0}, best_hi{Int(-2), 0};
    bool first = true;
    for (const auto& comp : g.components()) {
        if (comp.size() == 1) {
            Dyadic z{Int(0), 0};
            if (first || best_hi < z) {
                best_lo = Dyadic{Int(-1), bits};
                best_hi = z;
                first = false;
            }
            continue;
        }
        Graph sub = g.induced(comp);
        FourierSeq fs(char_poly(sub));
        RootEnclosure e = isolate_largest_root(fs, bits, false);
        if (first || best_hi < e.hi) {
            best_lo = e.lo;
            best_hi = e.hi;
            first = false;
        }
    }
    SpectralValue sv;
    sv.lo = best_lo;
    sv.hi = best_hi;
    sv.rho = 0.5 * (best_lo.to_double() + best_hi.to_double());
    sv.tol = std::max(tol, 0.5 * (best_hi.to_double() - best_lo.to_double()));
    return sv;
}

}  // namespace spex
