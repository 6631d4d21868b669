#include "spex/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace spex {

Poly Poly::constant(Int v) {
    Poly p;
    if (v != 0) p.c = {std::move(v)};
    return p;
}

Poly Poly::monomial(int k, Int coeff) {
    Poly p;
    if (coeff != 0) {
        p.c.assign(k + 1, Int(0));
        p.c[k] = std::move(coeff);
    }
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Int& s) {
    if (s == 0) return Poly::zero();
    Poly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

Poly derivative(const Poly& p) {
    Poly r;
    if (p.degree() < 1) return r;
    r.c.resize(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * Int(static_cast<long>(i));
    r.trim();
    return r;
}

Int content(const Poly& p) {
    Int g = 0;
    for (const auto& v : p.c) g = boost::multiprecision::gcd(g, v);
    return g;
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    Poly r = p;
    for (auto& v : r.c) v /= g;
    return r;
}

namespace {

// pseudo-remainder of a by b (deg a >= deg b >= 0)
Poly pseudo_rem(Poly a, const Poly& b) {
    int db = b.degree();
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int la = a.leading();
        for (auto& v : a.c) v *= lb;
        for (int i = 0; i <= db; ++i) a.c[i + shift] -= la * b.c[i];
        a.trim();
    }
    return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_identity_check(const Poly& lhs, const Poly& rhs) { return lhs == rhs; }

double Dyadic::to_double() const { return static_cast<double>(num) / std::ldexp(1.0, k); }

std::string Dyadic::to_decimal_string() const {
    // num / 2^k = num * 5^k / 10^k, an exact finite decimal
    Int scaled = num;
    for (int i = 0; i < k; ++i) scaled *= 5;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string digits = scaled.str();
    std::string out;
    if (k == 0) {
        out = digits;
    } else {
        if (static_cast<int>(digits.size()) <= k)
            digits.insert(0, k + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
    return (a.num << b.k) < (b.num << a.k);
}

bool operator<=(const Dyadic& a, const Dyadic& b) {
    return (a.num << b.k) <= (b.num << a.k);
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    int K = std::max(a.k, b.k);
    Int num = (a.num << (K - a.k)) + (b.num << (K - b.k));
    return Dyadic{std::move(num), K + 1};
}

int sign_at(const Poly& p, const Dyadic& x) {
    if (p.is_zero()) return 0;
    int d = p.degree();
    // 2^(k*d) * p(num / 2^k) via Horner with shifted coefficients
    Int r = p.c[d];
    for (int i = d - 1; i >= 0; --i) {
        r = r * x.num + (p.c[i] << (x.k * (d - i)));
    }
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

std::vector<std::string> coefficient_strings(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const auto& v : p.c) out.push_back(v.str());
    return out;
}

}  // namespace spex
