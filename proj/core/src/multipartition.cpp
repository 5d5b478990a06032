#include "reflie/multipartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reflie {

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition conjugate_partition(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.resize(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++out[j];
    return out;
}

int Multipartition::total() const {
    int n = 0;
    for (const auto& p : parts) n += std::accumulate(p.begin(), p.end(), 0);
    return n;
}

int Multipartition::support() const {
    int k = 0;
    for (const auto& p : parts)
        if (!p.empty()) ++k;
    return k;
}

int Multipartition::corners() const {
    int k = 0;
    for (const auto& p : parts)
        for (size_t i = 0; i < p.size(); ++i)
            if (i + 1 == p.size() || p[i] > p[i + 1]) ++k;
    return k;
}

Multipartition Multipartition::shifted(long k) const {
    const long L = components();
    Multipartition out;
    out.parts.resize(L);
    for (long i = 0; i < L; ++i) out.parts[((i + k) % L + L) % L] = parts[i];
    return out;
}

std::string Multipartition::label() const {
    std::string s = "(";
    for (int i = 0; i < components(); ++i) {
        if (i) s += ",";
        s += "[";
        for (size_t j = 0; j < parts[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(parts[i][j]);
        }
        s += "]";
    }
    return s + ")";
}

std::vector<Multipartition> multipartitions(int components, int n) {
    if (components < 1) throw std::invalid_argument("multipartitions: need a component");
    std::vector<std::vector<Partition>> per(n + 1);
    for (int k = 0; k <= n; ++k) per[k] = partitions_of(k);
    std::vector<Multipartition> out;
    Multipartition cur;
    cur.parts.resize(components);
    auto rec = [&](auto&& self, int comp, int rest) -> void {
        if (comp == components) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int k = 0; k <= rest; ++k)
            for (const auto& p : per[k]) {
                cur.parts[comp] = p;
                self(self, comp + 1, rest - k);
            }
        cur.parts[comp].clear();
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

long aut_order(const Multipartition& mp, long step) {
    const long L = mp.components();
    const long reach = L / std::gcd(L, step);
    long a = 0;
    for (long k = 0; k < reach; ++k)
        if (mp.shifted(k * step) == mp) ++a;
    return a;
}

Multipartition canonical_shift(const Multipartition& mp, long step) {
    const long L = mp.components();
    const long reach = L / std::gcd(L, step);
    Multipartition best = mp;
    for (long k = 1; k < reach; ++k) {
        Multipartition cand = mp.shifted(k * step);
        if (cand < best) best = cand;
    }
    return best;
}

std::vector<Tableau> standard_tableaux(const Multipartition& mp) {
    const int L = mp.components();
    const int n = mp.total();
    std::vector<Tableau> out;
    Tableau cur(n);
    // fill[c][i] = boxes of row i in component c already used; rows fill
    // left to right, and a box opens once the row above is strictly longer.
    std::vector<std::vector<int>> fill(L);
    for (int c = 0; c < L; ++c) fill[c].assign(mp.parts[c].size(), 0);
    auto rec = [&](auto&& self, int entry) -> void {
        if (entry > n) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c < L; ++c)
            for (size_t i = 0; i < fill[c].size(); ++i) {
                if (fill[c][i] >= mp.parts[c][i]) continue;
                if (i > 0 && fill[c][i] >= fill[c][i - 1]) continue;
                cur[entry - 1] = {c, static_cast<int>(i), fill[c][i]};
                ++fill[c][i];
                self(self, entry + 1);
                --fill[c][i];
            }
    };
    rec(rec, 1);
    return out;
}

long standard_count(const Multipartition& mp) {
    const int n = mp.total();
    Integer num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    Integer den = 1;
    for (const auto& p : mp.parts)
        for (size_t i = 0; i < p.size(); ++i)
            for (int j = 0; j < p[i]; ++j) {
                int arm = p[i] - 1 - j;
                int leg = 0;
                for (size_t ii = i + 1; ii < p.size(); ++ii)
                    if (p[ii] > j) ++leg;
                den *= arm + leg + 1;
            }
    Integer q = num / den;
    if (q * den != num) throw std::logic_error("standard_count: hook product does not divide");
    if (!q.fits_slong_p()) throw std::overflow_error("standard_count: dimension overflow");
    return q.get_si();
}

}  // namespace reflie
