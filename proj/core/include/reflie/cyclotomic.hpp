#pragma once

// Exact cyclotomic arithmetic. A value carries an explicit conductor n and
// its coordinates in the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n),
// reduced modulo the n-th cyclotomic polynomial. Arithmetic requires equal
// conductors; promotion to a larger field is always explicit via embedded().
// Values are never silently moved to a different field, so the stored
// conductor is stable under serialization and equality is plain coordinate
// comparison.

#include <string>
#include <vector>

#include "reflie/poly.hpp"
#include "reflie/rational.hpp"

namespace reflie {

class Cyc {
  public:
    // Zero of Q = Q(zeta_1).
    Cyc() : n_(1), c_(1, Rational(0)) {}
    explicit Cyc(Rational a) : n_(1), c_{std::move(a)} {}
    explicit Cyc(long a) : n_(1), c_{Rational(a)} {}

    // Coordinates in the power basis; coords.size() must be phi(n).
    Cyc(long n, std::vector<Rational> coords);

    static Cyc zero(long n);
    static Cyc one(long n);
    static Cyc from_rational(long n, const Rational& a);

    // zeta_n^k (k arbitrary, reduced mod n).
    static Cyc zeta(long n, long k = 1);

    long conductor() const { return n_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    // True when the value lies in Q, i.e. all basis coordinates above 1 vanish.
    bool is_rational() const;
    Rational to_rational() const;  // throws unless is_rational()

    // Image under zeta_n -> zeta_m^(m/n); requires n | m.
    Cyc embedded(long m) const;

    // Galois twist zeta_n -> zeta_n^j, gcd(j, n) = 1. conj() is j = -1.
    Cyc galois(long j) const;
    Cyc conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

    std::string str() const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a);
    Cyc inv() const;

    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

    // Coordinate equality; mixed conductors are a caller bug and throw.
    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  private:
    long n_;
    std::vector<Rational> c_;
};

Cyc operator*(const Rational& s, const Cyc& a);
inline Cyc operator*(const Cyc& a, const Rational& s) { return s * a; }

// Equality of values under the compatible embeddings into Q(zeta_lcm).
bool value_equal(const Cyc& a, const Cyc& b);

inline Cyc zero_like(const Cyc& a) { return Cyc::zero(a.conductor()); }
inline Cyc one_like(const Cyc& a) { return Cyc::one(a.conductor()); }

// Cyclotomic polynomial Phi_n over Q (integer coefficients in fact).
const Poly<Rational>& cyclotomic_polynomial(long n);

}  // namespace reflie
