#include "reflie/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "reflie/numtheory.hpp"

namespace reflie {

namespace {

// Per-conductor data: Phi_n and the reduction rows expressing x^k mod Phi_n
// for k up to max(2*phi-2, n-1), which covers both products of reduced
// elements and direct powers zeta_n^k.
struct FieldTable {
    long n = 1;
    long phi = 1;
    Poly<Rational> minpoly;
    std::vector<std::vector<Rational>> reduce;  // reduce[k - phi] = coords of x^k

    const std::vector<Rational>& row(long k) const { return reduce[k - phi]; }
};

Poly<Rational> compute_cyclotomic(long n, std::map<long, Poly<Rational>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    std::vector<Rational> xn(n + 1, Rational(0));
    xn[0] = Rational(-1);
    xn[n] = Rational(1);
    Poly<Rational> p{std::move(xn)};
    for (long d : divisors(n)) {
        if (d == n) continue;
        auto [q, r] = divmod(p, compute_cyclotomic(d, memo));
        if (!r.is_zero()) throw std::logic_error("cyclotomic polynomial division not exact");
        p = std::move(q);
    }
    memo.emplace(n, p);
    return p;
}

const FieldTable& table(long n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic: conductor must be positive");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<FieldTable>> cache;
    static std::map<long, Poly<Rational>> poly_memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<FieldTable>();
    t->n = n;
    t->phi = euler_phi(n);
    t->minpoly = compute_cyclotomic(n, poly_memo);
    long top = std::max(2 * t->phi - 2, n - 1);
    // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1}) since Phi is monic;
    // later rows follow by multiplying the previous one by x and folding the
    // overflow coefficient back through the first row.
    if (top >= t->phi) {
        std::vector<Rational> first(t->phi);
        for (long i = 0; i < t->phi; ++i) first[i] = -t->minpoly.coeff(i);
        t->reduce.push_back(first);
        for (long k = t->phi + 1; k <= top; ++k) {
            const auto& prev = t->reduce.back();
            std::vector<Rational> row(t->phi, Rational(0));
            for (long i = 0; i + 1 < t->phi; ++i) row[i + 1] = prev[i];
            const Rational& carry = prev[t->phi - 1];
            if (!is_zero(carry))
                for (long i = 0; i < t->phi; ++i) row[i] += carry * t->reduce[0][i];
            t->reduce.push_back(std::move(row));
        }
    }
    const FieldTable& ref = *t;
    cache.emplace(n, std::move(t));
    return ref;
}

// Reduce a raw power expansion (possibly of degree >= phi) to basis coords.
std::vector<Rational> reduce_powers(long n, const std::vector<Rational>& raw) {
    const FieldTable& t = table(n);
    std::vector<Rational> out(t.phi, Rational(0));
    for (size_t k = 0; k < raw.size(); ++k) {
        if (is_zero(raw[k])) continue;
        if (static_cast<long>(k) < t.phi) {
            out[k] += raw[k];
        } else {
            const auto& row = t.row(static_cast<long>(k));
            for (long i = 0; i < t.phi; ++i) out[i] += raw[k] * row[i];
        }
    }
    return out;
}

}  // namespace

const Poly<Rational>& cyclotomic_polynomial(long n) { return table(n).minpoly; }

Cyc::Cyc(long n, std::vector<Rational> coords) : n_(n), c_(std::move(coords)) {
    if (static_cast<long>(c_.size()) != table(n).phi)
        throw std::invalid_argument("cyclotomic: coordinate count must equal phi(n)");
}

Cyc Cyc::zero(long n) { return Cyc(n, std::vector<Rational>(table(n).phi, Rational(0))); }

Cyc Cyc::one(long n) { return from_rational(n, Rational(1)); }

Cyc Cyc::from_rational(long n, const Rational& a) {
    std::vector<Rational> c(table(n).phi, Rational(0));
    c[0] = a;
    return Cyc(n, std::move(c));
}

Cyc Cyc::zeta(long n, long k) {
    k = mod_pos(k, n);
    std::vector<Rational> raw(k + 1, Rational(0));
    raw[k] = Rational(1);
    return Cyc(n, reduce_powers(n, raw));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (!reflie::is_zero(x)) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!reflie::is_zero(c_[i])) return false;
    return true;
}

Rational Cyc::to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic: value is not rational: " + str());
    return c_[0];
}

Cyc Cyc::embedded(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("cyclotomic: embedding needs n | m");
    long step = m / n_;
    std::vector<Rational> raw((c_.size() - 1) * step + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) raw[k * step] = c_[k];
    return Cyc(m, reduce_powers(m, raw));
}

Cyc Cyc::galois(long j) const {
    j = mod_pos(j, n_);
    if (std::gcd(j, n_) != 1) throw std::invalid_argument("cyclotomic: galois exponent not coprime");
    std::vector<Rational> raw(n_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) raw[(k * j) % n_] += c_[k];
    return Cyc(n_, reduce_powers(n_, raw));
}

namespace {

void require_same_conductor(const Cyc& a, const Cyc& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("cyclotomic: conductor mismatch (" +
                                    std::to_string(a.conductor()) + " vs " +
                                    std::to_string(b.conductor()) + "); promote via embedded()");
}

}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
    require_same_conductor(a, b);
    std::vector<Rational> x = a.coords();
    for (size_t i = 0; i < x.size(); ++i) x[i] += b.coords()[i];
    return Cyc(a.conductor(), std::move(x));
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    require_same_conductor(a, b);
    std::vector<Rational> x = a.coords();
    for (size_t i = 0; i < x.size(); ++i) x[i] -= b.coords()[i];
    return Cyc(a.conductor(), std::move(x));
}

Cyc operator-(const Cyc& a) {
    std::vector<Rational> c = a.coords();
    for (auto& x : c) x = -x;
    return Cyc(a.conductor(), std::move(c));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    require_same_conductor(a, b);
    const auto& x = a.coords();
    const auto& y = b.coords();
    std::vector<Rational> raw(x.size() + y.size() - 1, Rational(0));
    for (size_t i = 0; i < x.size(); ++i) {
        if (is_zero(x[i])) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (is_zero(y[j])) continue;
            raw[i + j] += x[i] * y[j];
        }
    }
    return Cyc(a.conductor(), reduce_powers(a.conductor(), raw));
}

Cyc operator*(const Rational& s, const Cyc& a) {
    std::vector<Rational> x = a.coords();
    for (auto& v : x) v *= s;
    return Cyc(a.conductor(), std::move(x));
}

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
    Poly<Rational> a{std::vector<Rational>(c_)};
    auto [g, u, v] = poly_egcd(a, table(n_).minpoly);
    (void)v;
    if (g.degree() != 0)
        throw std::logic_error("cyclotomic: minimal polynomial not coprime to nonzero element");
    // g is monic of degree 0, i.e. exactly 1, so u is the inverse mod Phi_n.
    std::vector<Rational> raw = u.c;
    return Cyc(n_, reduce_powers(n_, raw));
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

bool operator==(const Cyc& a, const Cyc& b) {
    require_same_conductor(a, b);
    return a.coords() == b.coords();
}

bool value_equal(const Cyc& a, const Cyc& b) {
    long m = std::lcm(a.conductor(), b.conductor());
    return a.embedded(m).coords() == b.embedded(m).coords();
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool emitted = false;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (reflie::is_zero(c_[k])) continue;
        Rational v = c_[k];
        if (emitted) {
            os << (sgn(v) < 0 ? " - " : " + ");
            if (sgn(v) < 0) v = -v;
        } else if (sgn(v) < 0) {
            os << "-";
            v = -v;
        }
        bool unit = is_one(v);
        if (k == 0 || !unit) os << v.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << "z" << n_;
            if (k > 1) os << "^" << k;
        }
        emitted = true;
    }
    if (!emitted) os << "0";
    return os.str();
}

}  // namespace reflie
