#pragma once

// Incremental row-echelon span over an exact coefficient ring. Elimination
// uses cross-multiplication only (no division), so it works verbatim over
// the rationals, cyclotomics and prime fields; rational content is stripped
// after every elimination to keep coefficient growth in check.

#include <numeric>
#include <vector>

#include "reflie/cyclotomic.hpp"
#include "reflie/primefield.hpp"

namespace reflie {

namespace detail {

// Divide a rational row by its content (gcd of numerators / lcm of
// denominators), making the entries coprime integers.
inline void strip_content(std::vector<Rational>& v) {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& x : v) {
        if (is_zero(x)) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (sgn(num_gcd) == 0) return;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& x : v)
        if (!is_zero(x)) x *= scale;
}

inline void strip_content(std::vector<Cyc>& v) {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& x : v)
        for (const auto& c : x.coords()) {
            if (is_zero(c)) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
    if (sgn(num_gcd) == 0) return;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& x : v)
        if (!x.is_zero()) x = scale * x;
}

// Over a prime field, normalizing the pivot to 1 plays the same role.
inline void strip_content(std::vector<Fp>& v) {
    for (const Fp& x : v) {
        if (x.is_zero()) continue;
        Fp s = x.inv();
        for (auto& y : v)
            if (!y.is_zero()) y = y * s;
        return;
    }
}

template <class T>
void strip_content(std::vector<T>&) {}

template <class T>
bool entry_zero(const T& x) {
    return x == zero_like(x);
}
inline bool entry_zero(const Cyc& x) { return x.is_zero(); }
inline bool entry_zero(Fp x) { return x.is_zero(); }
inline bool entry_zero(const Rational& x) { return is_zero(x); }

}  // namespace detail

template <class T>
class SpanBasis {
  public:
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<T>>& rows() const { return rows_; }

    // Reduce v against the basis in pivot order; afterwards v is either all
    // zero (it was in the span) or has its leading entry on a fresh pivot.
    void reduce(std::vector<T>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const T coef = v[pivots_[r]];  // copy: the loop below overwrites v[pivot]
            if (detail::entry_zero(coef)) continue;
            const T& piv = rows_[r][pivots_[r]];
            for (size_t j = 0; j < v.size(); ++j) v[j] = piv * v[j] - coef * rows_[r][j];
            detail::strip_content(v);
        }
    }

    bool contains(std::vector<T> v) const {
        reduce(v);
        return pivot_of(v) < 0;
    }

    // Returns true when v enlarges the span (v then joins the basis).
    bool insert(std::vector<T> v) {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

  private:
    int pivot_of(const std::vector<T>& v) const {
        for (size_t j = 0; j < v.size(); ++j)
            if (!detail::entry_zero(v[j])) return static_cast<int>(j);
        return -1;
    }

    std::vector<std::vector<T>> rows_;  // sorted by pivot column
    std::vector<int> pivots_;
};

}  // namespace reflie
