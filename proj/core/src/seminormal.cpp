#include "reflie/seminormal.hpp"

#include <stdexcept>

namespace reflie {

AmbientModel::AmbientModel(Multipartition shape) : shape_(std::move(shape)) {
    m_ = shape_.components();
    r_ = shape_.total();
    if (r_ < 1) throw std::invalid_argument("seminormal model: empty shape");
    tabs_ = standard_tableaux(shape_);
    dim_ = static_cast<int>(tabs_.size());
    if (dim_ != standard_count(shape_))
        throw std::logic_error("seminormal model: filling count disagrees with hook formula");
    for (int x = 0; x < dim_; ++x) index_[tabs_[x]] = x;

    comp_.assign(dim_, std::vector<int>(r_));
    for (int x = 0; x < dim_; ++x)
        for (int k = 0; k < r_; ++k) comp_[x][k] = tabs_[x][k][0];

    mix_.assign(r_ > 1 ? r_ - 1 : 0, std::vector<Mixing>(dim_));
    for (int i = 1; i < r_; ++i)
        for (int x = 0; x < dim_; ++x) {
            const auto& a = tabs_[x][i - 1];  // box of entry i
            const auto& b = tabs_[x][i];      // box of entry i+1
            Mixing mx{-1, Rational(0), Rational(0)};
            if (a[0] == b[0] && a[1] == b[1]) {
                mx.self = 1;
            } else if (a[0] == b[0] && a[2] == b[2]) {
                mx.self = -1;
            } else {
                Tableau swapped = tabs_[x];
                std::swap(swapped[i - 1], swapped[i]);
                auto it = index_.find(swapped);
                if (it == index_.end())
                    throw std::logic_error("seminormal model: exchanged filling not standard");
                mx.partner = it->second;
                if (a[0] == b[0]) {
                    Rational dist(content(b) - content(a));
                    mx.self = 1 / dist;
                    mx.cross = dist < 0 ? Rational(1) : 1 - 1 / (dist * dist);
                } else {
                    mx.cross = 1;
                }
            }
            mix_[i - 1][x] = mx;
        }
}

int AmbientModel::tableau_index(const Tableau& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::invalid_argument("seminormal model: unknown filling");
    return it->second;
}

Mat<Cyc> AmbientModel::operator()(const Monomial& g) const {
    if (g.rank() != r_) throw std::invalid_argument("seminormal model: rank mismatch");
    Mat<Cyc> mat = Mat<Cyc>::identity(dim_, Cyc::zero(m_));
    Word w = word_factor(g, m_);
    for (const WordAtom& atom : w) {
        if (atom.diagonal) {
            for (int x = 0; x < dim_; ++x) {
                Cyc s = Cyc::zeta(m_, atom.power * comp_[x][atom.index - 1]);
                for (int row = 0; row < dim_; ++row) mat(row, x) = mat(row, x) * s;
            }
        } else {
            const auto& col = mix_[atom.index - 1];
            for (int x = 0; x < dim_; ++x) {
                int p = col[x].partner;
                if (p == -1) {
                    if (col[x].self < 0)
                        for (int row = 0; row < dim_; ++row) mat(row, x) = -mat(row, x);
                } else if (p > x) {
                    Cyc sx = Cyc::from_rational(m_, col[x].self);
                    Cyc cx = Cyc::from_rational(m_, col[x].cross);
                    Cyc sp = Cyc::from_rational(m_, col[p].self);
                    Cyc cp = Cyc::from_rational(m_, col[p].cross);
                    for (int row = 0; row < dim_; ++row) {
                        Cyc vx = mat(row, x), vp = mat(row, p);
                        mat(row, x) = sx * vx + cx * vp;
                        mat(row, p) = sp * vp + cp * vx;
                    }
                }
            }
        }
    }
    return mat;
}

}  // namespace reflie
