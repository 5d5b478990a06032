#pragma once

// The monomial groups G(de,e,r): an element is an r x r matrix with exactly
// one nonzero entry per row and column, each a de-th root of unity, whose
// product is an e-th power (equivalently a d-th root of unity). Elements are
// stored as a permutation plus the vector of root exponents, indexed by row:
// the matrix maps basis vector j to zeta^(exps[perm[j]]) times basis vector
// perm[j]. Groups are enumerated eagerly; everything downstream (classes,
// characters, closures) works off the cached element list.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reflie/cyclotomic.hpp"
#include "reflie/linalg.hpp"

namespace reflie {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroupParams {
    long d = 1, e = 1, r = 1;

    long level() const { return d * e; }  // order of the root of unity, de
    unsigned long long order() const;     // r! * d^r * e^(r-1)
    std::string name() const;             // "G(de,e,r)"
    void validate() const;                // throws invalid_argument

    friend bool operator==(const GroupParams& a, const GroupParams& b) {
        return a.d == b.d && a.e == b.e && a.r == b.r;
    }
};

struct Monomial {
    std::vector<int> perm;  // perm[j] = image of column j
    std::vector<int> exps;  // exps[i] = root exponent in row i, mod level

    int rank() const { return static_cast<int>(perm.size()); }

    static Monomial id(int r);
    // t = diag(zeta, 1, ..., 1).
    static Monomial t_gen(int r);
    // t_k = diag(1, ..., zeta at k, ..., 1), 1-based k.
    static Monomial t_diag(int r, int k, long power, long level);
    // Adjacent transposition matrix swapping i, i+1 (1-based i).
    static Monomial s_gen(int r, int i);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.perm == b.perm && a.exps == b.exps;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.perm != b.perm ? a.perm < b.perm : a.exps < b.exps;
    }
};

Monomial compose(const Monomial& g, const Monomial& h, long level);  // matrix product g*h
Monomial inverse(const Monomial& g, long level);
long t_degree(const Monomial& g, long level);  // sum of exponents mod level
Mat<Cyc> to_matrix(const Monomial& g, long level);

// Word in the ambient G(de,1,r) generators: a prefix of diagonal factors
// t_k^a followed by adjacent transpositions, to be multiplied left to right.
struct WordAtom {
    bool diagonal;  // true: t_{index}^power; false: s_{index}
    int index;      // 1-based
    long power;     // only for diagonal atoms
};
using Word = std::vector<WordAtom>;

Word word_factor(const Monomial& g, long level);
Monomial evaluate_word(const Word& w, int r, long level);
// The same word with every t_k expanded as s_{k-1}..s_1 t^a s_1..s_{k-1},
// leaving only the generators t and s_i.
std::vector<std::pair<std::string, long>> flatten_word(const Word& w);

struct ReflectionSet {
    std::vector<int> elements;              // group element indices of the reflections
    std::vector<std::vector<int>> classes;  // the same indices, grouped by conjugacy
};

class Group {
  public:
    // Enumerate G(de,e,r); throws CapExceeded when the order formula exceeds cap.
    static std::shared_ptr<const Group> make(GroupParams params, unsigned long long cap = 10000);

    // Closure of a generator subset inside an existing group (elements must
    // belong to parent). The result has no series params.
    static std::shared_ptr<const Group> make_subgroup(const Group& parent,
                                                      std::vector<Monomial> gens,
                                                      unsigned long long cap = 10000);

    const std::optional<GroupParams>& params() const { return params_; }
    long level() const { return level_; }
    int rank() const { return r_; }
    size_t size() const { return elements_.size(); }
    const std::vector<Monomial>& elements() const { return elements_; }
    const Monomial& element(int i) const { return elements_[i]; }
    const std::vector<std::pair<std::string, Monomial>>& generators() const { return gens_; }

    int index_of(const Monomial& g) const;  // -1 when not a member
    bool contains(const Monomial& g) const { return index_of(g) >= 0; }
    int compose_idx(int a, int b) const;
    int inverse_idx(int a) const;

    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    const std::vector<int>& class_of() const { return class_of_; }      // element -> class
    const std::vector<int>& class_reps() const { return class_reps_; }  // class -> element
    int class_of_inverse(int class_idx) const;

    const ReflectionSet& reflections() const { return reflections_; }
    // Determinant of the monomial matrix as +-1; throws for other values.
    int sign(int element_idx) const;

  private:
    Group() = default;
    void enumerate(unsigned long long expected, unsigned long long cap);
    void compute_classes();
    void compute_reflections();

    std::optional<GroupParams> params_;
    long level_ = 1;
    int r_ = 1;
    std::vector<Monomial> elements_;
    std::map<Monomial, int> index_;
    std::vector<std::pair<std::string, Monomial>> gens_;

    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<int> class_reps_;
    ReflectionSet reflections_;
    std::vector<int> signs_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Generators of G(de,e,r) inside G(de,1,r): s_1..s_{r-1}, plus t^e when
// d > 1, plus s'_1 = t s_1 t^-1 when e > 1 and r >= 2.
std::vector<std::pair<std::string, Monomial>> series_generators(const GroupParams& p);

}  // namespace reflie
