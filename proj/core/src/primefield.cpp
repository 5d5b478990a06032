#include "reflie/primefield.hpp"

#include <string>

#include "reflie/numtheory.hpp"

namespace reflie {

Fp Fp::pow(std::uint64_t e) const { return Fp(p, pow_mod(v, e, p)); }

Fp Fp::inv() const {
    if (v == 0) throw BadPrime("Fp: inverse of zero mod " + std::to_string(p));
    return pow(p - 2);
}

long first_usable_prime(long n, long lower_bound) {
    if (n <= 0) throw std::invalid_argument("first_usable_prime: bad order");
    long p = lower_bound;
    // Walk the progression 1 mod n from the first candidate >= lower_bound.
    if (n > 1) {
        long r = mod_pos(p - 1, n);
        if (r) p += n - r;
    }
    for (;; p += (n > 1 ? n : 1))
        if (is_prime(p)) return p;
}

Fp element_of_order(std::uint32_t p, long n) {
    if ((long)((p - 1) % n) != 0) throw std::invalid_argument("element_of_order: n does not divide p-1");
    auto primes = factorize(n);
    for (std::uint32_t x = 2; x < p; ++x) {
        Fp y = Fp(p, x).pow((p - 1) / n);
        bool full = true;
        for (auto [q, e] : primes) {
            (void)e;
            if (y.pow(n / q).v == 1) {
                full = false;
                break;
            }
        }
        if (full) return y;
    }
    throw std::logic_error("element_of_order: exhausted F_p without finding one");
}

Fp reduce_mod_p(const Rational& a, std::uint32_t p) {
    Integer num = a.get_num(), den = a.get_den();
    std::uint32_t d = static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
    if (d == 0) throw BadPrime("denominator divisible by " + std::to_string(p));
    std::uint32_t nmod = static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
    return Fp(p, nmod) / Fp(p, d);
}

Fp reduce_mod_p(const Cyc& a, std::uint32_t p, Fp root) {
    Fp acc(p, 0), pw(p, 1);
    for (const Rational& coeff : a.coords()) {
        if (!is_zero(coeff)) acc = acc + reduce_mod_p(coeff, p) * pw;
        pw = pw * root;
    }
    return acc;
}

}  // namespace reflie
