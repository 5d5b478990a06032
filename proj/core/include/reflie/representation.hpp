#pragma once

// Matrix representations over cyclotomic fields and their characters. The
// complete irreducible set of G(de,e,r) is produced from seminormal models
// of the ambient G(de,1,r): restriction splits a model along the
// eigenspaces of the shift operator permuting diagram components, one
// summand per eigenvalue, and shapes in the same shift orbit restrict to
// the same summands.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "reflie/groups.hpp"
#include "reflie/seminormal.hpp"

namespace reflie {

struct Rep {
    GroupPtr group;
    long conductor = 1;
    int dim = 0;
    std::string label;
    std::vector<std::pair<std::string, Mat<Cyc>>> gen_images;  // matches group->generators()
    std::function<Mat<Cyc>(const Monomial&)> eval;
    ModelPtr model;  // set when this is an unsplit seminormal model

    Mat<Cyc> operator()(const Monomial& g) const { return eval(g); }
    Mat<Cyc> at(int element_idx) const { return eval(group->element(element_idx)); }
};

class Character {
  public:
    Character() = default;
    Character(GroupPtr group, std::vector<Cyc> class_values);
    static Character of(const Rep& rho);

    const GroupPtr& group() const { return group_; }
    const std::vector<Cyc>& values() const { return values_; }
    const Cyc& at_class(int c) const { return values_[c]; }
    const Cyc& at_element(int e) const { return values_[group_->class_of()[e]]; }
    const Cyc& degree() const;

    Character conj() const;            // the dual's character
    Character power_map(long k) const;  // class values at g^k
    Rational inner(const Character& other) const;
    bool rational_integer_valued() const;
    bool pm_one_valued() const;

    friend Character operator*(const Character& a, const Character& b);
    friend bool operator==(const Character& a, const Character& b);
    friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }

  private:
    GroupPtr group_;
    std::vector<Cyc> values_;
};

// Seminormal model of G(de,1,r) as a Rep of the given ambient group.
Rep seminormal_rep(GroupPtr ambient, const Multipartition& shape);

// Restriction of an unsplit seminormal model to the reflection subgroup,
// split into its irreducible summands (components of the shift-eigenspace
// decomposition). target->params() must describe a subgroup of the model's
// ambient wreath product with the same level.
std::vector<Rep> clifford_components(const Rep& ambient_model, GroupPtr target);

// All irreducible representations of G(de,e,r), one per shift orbit of
// shapes and eigenvalue; checks sum of squares against the group order.
std::vector<Rep> irreps(GroupPtr W);

Rep dual_rep(const Rep& rho);
Rep tensor_linear(const Rep& rho, const Rep& eta);  // eta.dim == 1
Rep exterior_rep(const Rep& rho, int k);

// Symmetric / alternating square characters from chi and the square power
// map.
Character sym2_character(const Character& chi);
Character alt2_character(const Character& chi);

// Exterior power character via the Newton identity on power sums.
Character exterior_character(const Character& chi, int k);

enum class BilinearType { none, symmetric, alternating };

// Type of the invariant pairing twisted by eta: the multiplicity of
// eps*eta (eps the determinant character) in the symmetric versus the
// alternating square of the dual character. At most one multiplicity is
// nonzero for irreducible chi; larger values throw.
BilinearType bilinear_type(const Character& chi, const Character& eta);

// Index of the irreducible character equal to chi, or -1.
int find_character(const std::vector<Character>& table, const Character& chi);

// Embed an element of G(de,e,r-1) into G(de,e,r), fixing the last
// coordinate.
Monomial embed_corank1(const Monomial& g);

// Multiplicities of the irreducible characters of the corank-1 subgroup in
// the restriction of chi; table must list the subgroup's characters.
std::vector<long> restriction_multiplicities(const Character& chi, GroupPtr sub,
                                             const std::vector<Character>& sub_table);

}  // namespace reflie
