#pragma once

// Small-integer number theory used for root-of-unity bookkeeping. All inputs
// here are tiny (cyclotomic conductors, group orders), so trial division is
// entirely adequate.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace reflie {

inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw std::invalid_argument("factorize: need a positive integer");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline long euler_phi(long n) {
    long phi = n;
    for (auto [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 0) throw std::invalid_argument("pow_mod: zero modulus");
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = (unsigned __int128)acc * base % mod;
        base = (unsigned __int128)base * base % mod;
        exp >>= 1;
    }
    return acc;
}

// Euclidean remainder in [0, m).
inline long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace reflie
