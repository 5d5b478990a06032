#pragma once

// Integer partitions, tuples of partitions indexed by the de-th roots of
// unity, and the standard fillings of their diagrams. A tuple with r boxes
// in total labels a seminormal model of the ambient wreath product
// G(de,1,r); the fillings index its basis vectors.

#include <array>
#include <string>
#include <vector>

#include "reflie/rational.hpp"

namespace reflie {

using Partition = std::vector<int>;  // weakly decreasing positive parts

std::vector<Partition> partitions_of(int n);
Partition conjugate_partition(const Partition& p);

struct Multipartition {
    std::vector<Partition> parts;

    int components() const { return static_cast<int>(parts.size()); }
    int total() const;    // number of boxes
    int support() const;  // number of nonempty components
    int corners() const;  // number of removable boxes across all components

    // Components permuted cyclically: component i moves to i + k mod length.
    Multipartition shifted(long k) const;

    std::string label() const;  // e.g. "([2,1],[],[1])"

    friend bool operator==(const Multipartition& a, const Multipartition& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const Multipartition& a, const Multipartition& b) { return !(a == b); }
    friend bool operator<(const Multipartition& a, const Multipartition& b) {
        return a.parts < b.parts;
    }
};

// All tuples with the given number of components and n boxes, in
// lexicographic order.
std::vector<Multipartition> multipartitions(int components, int n);

// Order of the stabilizer of mp under shifts by multiples of step: the
// number of k in [0, L/gcd(L,step)) with mp.shifted(k*step) == mp.
long aut_order(const Multipartition& mp, long step);

// Lexicographically smallest tuple among the shifts of mp by multiples of
// step.
Multipartition canonical_shift(const Multipartition& mp, long step);

// A standard filling: entry k (1-based) sits in the box tab[k-1] given as
// {component, row, column}, all 0-based. Entries increase along rows and
// down columns of every component.
using Tableau = std::vector<std::array<int, 3>>;

inline int content(const std::array<int, 3>& box) { return box[2] - box[1]; }

std::vector<Tableau> standard_tableaux(const Multipartition& mp);

// Number of standard fillings, via the hook length formula.
long standard_count(const Multipartition& mp);

}  // namespace reflie
