#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps values in
// canonical form (gcd(num, den) = 1, den > 0) after every operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace reflie {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Decimal-string (de)serialization, bit-exact round trip.
inline std::pair<std::string, std::string> rational_to_strings(const Rational& a) {
    return {a.get_num().get_str(), a.get_den().get_str()};
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
        throw std::invalid_argument("rational: bad decimal string '" + num + "/" + den + "'");
    if (sgn(d) == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(n);
    q /= Rational(d);
    return q;
}

}  // namespace reflie
