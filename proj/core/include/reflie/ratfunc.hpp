#pragma once

// Rational functions in one variable q with exact rational coefficients,
// kept in the canonical form gcd(num, den) = 1 with den monic. This is the
// coefficient field for the generic-parameter Hecke models; the bar
// involution q -> 1/q and evaluation on the unit circle live here too.

#include <complex>
#include <string>

#include "reflie/poly.hpp"
#include "reflie/rational.hpp"

namespace reflie {

class RF {
  public:
    RF() : num_(), den_(Poly<Rational>::constant(Rational(1))) {}
    explicit RF(const Rational& a) : RF(Poly<Rational>::constant(a), Poly<Rational>::constant(Rational(1))) {}
    explicit RF(long a) : RF(Rational(a)) {}
    RF(Poly<Rational> num, Poly<Rational> den);

    static RF q() { return RF(Poly<Rational>::monomial(1), Poly<Rational>::constant(Rational(1))); }
    static RF q_pow(long k);

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational to_rational() const;

    // The involution q -> 1/q.
    RF bar() const;

    std::complex<double> operator()(std::complex<double> x) const;
    // Exact evaluation; throws when the denominator vanishes at x.
    Rational at(const Rational& x) const;
    bool defined_at(const Rational& x) const;

    // Multiplicity of (q - 1): positive for zeros, negative for poles.
    // Unbounded for the zero function, so only call on nonzero values.
    long order_at_one() const;

    std::string str() const;

    friend RF operator+(const RF& a, const RF& b);
    friend RF operator-(const RF& a, const RF& b);
    friend RF operator*(const RF& a, const RF& b);
    friend RF operator/(const RF& a, const RF& b);
    friend RF operator-(const RF& a);
    RF inv() const;

    RF& operator+=(const RF& b) { return *this = *this + b; }
    RF& operator-=(const RF& b) { return *this = *this - b; }
    RF& operator*=(const RF& b) { return *this = *this * b; }

    friend bool operator==(const RF& a, const RF& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RF& a, const RF& b) { return !(a == b); }

  private:
    Poly<Rational> num_, den_;
};

inline RF zero_like(const RF&) { return RF(); }
inline RF one_like(const RF&) { return RF(1); }

std::string poly_str(const Poly<Rational>& p, const std::string& var = "q");

}  // namespace reflie
