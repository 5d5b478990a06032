#include "reflie/ratfunc.hpp"

#include <sstream>

namespace reflie {

RF::RF(Poly<Rational> num, Poly<Rational> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly<Rational>::constant(Rational(1));
        return;
    }
    Poly<Rational> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    Rational lead = den_.leading();
    if (!is_one(lead)) {
        Rational s = Rational(1) / lead;
        num_ = s * num_;
        den_ = s * den_;
    }
}

RF RF::q_pow(long k) {
    if (k >= 0) return RF(Poly<Rational>::monomial(k), Poly<Rational>::constant(Rational(1)));
    return RF(Poly<Rational>::constant(Rational(1)), Poly<Rational>::monomial(-k));
}

Rational RF::to_rational() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant: " + str());
    return num_.coeff(0);
}

namespace {

Poly<Rational> reversed(const Poly<Rational>& p) {
    std::vector<Rational> c(p.c.rbegin(), p.c.rend());
    return Poly<Rational>(std::move(c));
}

}  // namespace

RF RF::bar() const {
    if (is_zero()) return RF();
    // f(1/q) = q^(deg den - deg num) * rev(num)(q) / rev(den)(q).
    long shift = den_.degree() - num_.degree();
    Poly<Rational> n = reversed(num_), d = reversed(den_);
    if (shift >= 0)
        return RF(Poly<Rational>::monomial(shift) * n, d);
    return RF(n, Poly<Rational>::monomial(-shift) * d);
}

std::complex<double> RF::operator()(std::complex<double> x) const {
    auto horner = [&](const Poly<Rational>& p) {
        std::complex<double> acc = 0.0;
        for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    };
    return horner(num_) / horner(den_);
}

bool RF::defined_at(const Rational& x) const { return !reflie::is_zero(den_(x)); }

Rational RF::at(const Rational& x) const {
    Rational d = den_(x);
    if (reflie::is_zero(d)) throw std::domain_error("rational function: pole at evaluation point");
    return num_(x) / d;
}

long RF::order_at_one() const {
    if (is_zero()) throw std::domain_error("order_at_one: zero function");
    // num and den are coprime, so at most one of them vanishes at 1.
    Poly<Rational> lin({Rational(-1), Rational(1)});
    auto mult = [&](Poly<Rational> p) {
        long k = 0;
        while (reflie::is_zero(p(Rational(1)))) {
            p = p / lin;
            ++k;
        }
        return k;
    };
    if (reflie::is_zero(num_(Rational(1)))) return mult(num_);
    return -mult(den_);
}

RF operator+(const RF& a, const RF& b) { return RF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
RF operator-(const RF& a, const RF& b) { return RF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
RF operator*(const RF& a, const RF& b) { return RF(a.num_ * b.num_, a.den_ * b.den_); }

RF RF::inv() const {
    if (is_zero()) throw std::domain_error("rational function: division by zero");
    return RF(den_, num_);
}

RF operator/(const RF& a, const RF& b) { return a * b.inv(); }
RF operator-(const RF& a) { return RF(-a.num_, a.den_); }

std::string poly_str(const Poly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool emitted = false;
    for (int k = p.degree(); k >= 0; --k) {
        Rational v = p.coeff(k);
        if (is_zero(v)) continue;
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
            os << var;
            if (k > 1) os << "^" << k;
        }
        emitted = true;
    }
    return os.str();
}

std::string RF::str() const {
    if (den_.degree() == 0) return poly_str(num_);
    std::string n = poly_str(num_), d = poly_str(den_);
    if (num_.degree() > 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace reflie
