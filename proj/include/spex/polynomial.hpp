#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spex {

using Int = boost::multiprecision::cpp_int;

// Dense univariate polynomial over arbitrary-precision integers,
// coefficients stored lowest degree first. Zero polynomial <=> empty vector.
struct Poly {
    std::vector<Int> c;

    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(Int v);
    static Poly monomial(int k, Int coeff = 1);  // coeff * x^k

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    const Int& leading() const { return c.back(); }
    Int coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Int(0); }

    void trim();

    bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Int& s);

Poly derivative(const Poly& p);

// gcd of contents; 0 for the zero polynomial.
Int content(const Poly& p);
// p / content(p) with positive leading coefficient; zero stays zero.
Poly primitive_part(const Poly& p);
// primitive gcd with positive leading coefficient (primitive PRS).
Poly poly_gcd(Poly a, Poly b);

// Exact coefficient-vector equality.
bool poly_identity_check(const Poly& lhs, const Poly& rhs);

// Dyadic rational num / 2^k with k >= 0.
struct Dyadic {
    Int num;
    int k = 0;

    double to_double() const;
    // exact finite decimal representation
    std::string to_decimal_string() const;
};

bool operator<(const Dyadic& a, const Dyadic& b);
bool operator<=(const Dyadic& a, const Dyadic& b);
Dyadic midpoint(const Dyadic& a, const Dyadic& b);

// Sign of p(x) at a dyadic point, computed exactly: -1, 0, or +1.
int sign_at(const Poly& p, const Dyadic& x);

// Decimal strings of the coefficients, lowest degree first.
std::vector<std::string> coefficient_strings(const Poly& p);

}  // namespace spex
