#pragma once

// Dense univariate polynomials over a field. Coefficient vector is kept
// trimmed: no trailing zeros, so degree(p) == p.c.size() - 1 and the zero
// polynomial has an empty vector (degree -1 by convention).

#include <stdexcept>
#include <vector>

namespace reflie {

template <class K>
struct Poly {
    std::vector<K> c;  // c[i] is the coefficient of x^i

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(const K& a) {
        Poly p;
        if (!(a == K(0))) p.c = {a};
        return p;
    }

    // x^k
    static Poly monomial(int k, const K& a = K(1)) {
        Poly p;
        if (!(a == K(0))) {
            p.c.assign(k + 1, K(0));
            p.c[k] = a;
        }
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    const K& leading() const {
        if (c.empty()) throw std::logic_error("poly: leading coefficient of zero");
        return c.back();
    }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return K(0);
        return c[i];
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    K operator()(const K& x) const {
        K acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    friend Poly operator*(const K& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = s * x;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

// Euclidean division: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::invalid_argument("poly: division by zero");
    Poly<K> q, r = a;
    if (r.degree() >= b.degree()) q.c.assign(r.degree() - b.degree() + 1, K(0));
    const K inv_lead = K(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        K factor = r.leading() * inv_lead;
        q.c[shift] = factor;
        for (int i = 0; i <= b.degree(); ++i) r.c[shift + i] = r.c[shift + i] - factor * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).first;
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

template <class K>
Poly<K> make_monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return (K(1) / a.leading()) * a;
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_egcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0 = Poly<K>::constant(K(1)), u1;
    Poly<K> v0, v1 = Poly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly<K> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Poly<K> v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        K s = K(1) / r0.leading();
        r0 = s * r0;
        u0 = s * u0;
        v0 = s * v0;
    }
    return {r0, u0, v0};
}

}  // namespace reflie
