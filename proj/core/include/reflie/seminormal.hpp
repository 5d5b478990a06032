#pragma once

// Seminormal matrix models for the irreducible representations of the
// ambient wreath product G(m,1,r). The model attached to an m-tuple of
// partitions with r boxes has one basis vector per standard filling. Each
// diagonal generator t_k acts on a filling by the m-th root of unity whose
// exponent is the component containing k; each transposition s_i acts on
// the span of a filling and the filling with i, i+1 exchanged, with
// coefficients read off the axial distance between the two boxes.

#include <map>
#include <memory>

#include "reflie/groups.hpp"
#include "reflie/multipartition.hpp"

namespace reflie {

class AmbientModel {
  public:
    explicit AmbientModel(Multipartition shape);

    const Multipartition& shape() const { return shape_; }
    long level() const { return m_; }
    int rank() const { return r_; }
    int dim() const { return dim_; }
    const std::vector<Tableau>& tableaux() const { return tabs_; }
    int tableau_index(const Tableau& t) const;

    // Component containing the given 1-based entry of tableau number tab;
    // this is the exponent of the t_k eigenvalue.
    int component_of(int tab, int entry) const { return comp_[tab][entry - 1]; }

    // Matrix of a monomial element of G(m,1,r), columns indexed like
    // tableaux(); entries live in the m-th cyclotomic field.
    Mat<Cyc> operator()(const Monomial& g) const;

  private:
    // s_i sends the filling T to self * v_T + cross * v_partner; partner is
    // -1 when the image stays on the line through v_T.
    struct Mixing {
        int partner;
        Rational self;
        Rational cross;
    };

    Multipartition shape_;
    long m_;
    int r_, dim_;
    std::vector<Tableau> tabs_;
    std::map<Tableau, int> index_;
    std::vector<std::vector<int>> comp_;    // [tab][entry-1]
    std::vector<std::vector<Mixing>> mix_;  // [i-1][tab]
};

using ModelPtr = std::shared_ptr<const AmbientModel>;

}  // namespace reflie
