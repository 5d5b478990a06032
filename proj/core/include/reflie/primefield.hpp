#pragma once

// Arithmetic in F_p for word-sized primes, plus the reduction map from
// cyclotomic values: zeta_n goes to a chosen element of multiplicative order
// n, which exists exactly when p = 1 mod n. Reduction throws BadPrime when a
// denominator dies mod p, so callers can retry with the next usable prime.

#include <cstdint>
#include <stdexcept>

#include "reflie/cyclotomic.hpp"

namespace reflie {

struct BadPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Fp {
    std::uint32_t p = 0;
    std::uint32_t v = 0;

    Fp() = default;
    Fp(std::uint32_t prime, std::uint64_t value) : p(prime), v(static_cast<std::uint32_t>(value % prime)) {}

    bool is_zero() const { return v == 0; }

    friend Fp operator+(Fp a, Fp b) { return check(a, b), Fp(a.p, std::uint64_t(a.v) + b.v); }
    friend Fp operator-(Fp a, Fp b) { return check(a, b), Fp(a.p, std::uint64_t(a.v) + a.p - b.v); }
    friend Fp operator*(Fp a, Fp b) { return check(a, b), Fp(a.p, std::uint64_t(a.v) * b.v); }
    friend Fp operator-(Fp a) { return Fp(a.p, std::uint64_t(a.p) - a.v); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    friend bool operator==(Fp a, Fp b) { return check(a, b), a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    Fp pow(std::uint64_t e) const;
    Fp inv() const;

  private:
    static void check(Fp a, Fp b) {
        if (a.p != b.p) throw std::logic_error("Fp: mixed moduli");
    }
};

inline Fp zero_like(Fp a) { return Fp(a.p, 0); }
inline Fp one_like(Fp a) { return Fp(a.p, 1); }

// Smallest prime p >= lower_bound with p = 1 (mod n).
long first_usable_prime(long n, long lower_bound = 11);

// Deterministic element of multiplicative order exactly n in F_p; requires
// n | p - 1.
Fp element_of_order(std::uint32_t p, long n);

Fp reduce_mod_p(const Rational& a, std::uint32_t p);

// Reduction along zeta_n -> root; the root must have order conductor().
Fp reduce_mod_p(const Cyc& a, std::uint32_t p, Fp root);

}  // namespace reflie
