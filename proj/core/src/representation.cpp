#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "reflie/numtheory.hpp"

#include "rep_internal.hpp"

namespace reflie {

namespace {

long values_conductor(const std::vector<Cyc>& vals) {
    long n = 1;
    for (const auto& v : vals) n = std::lcm(n, v.conductor());
    return n;
}

std::vector<Cyc> embed_all(std::vector<Cyc> vals, long n) {
    for (auto& v : vals) v = v.embedded(n);
    return vals;
}

Mat<Cyc> embed_mat(const Mat<Cyc>& m, long n) {
    Mat<Cyc> out(m.rows(), m.cols(), Cyc::zero(n));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embedded(n);
    return out;
}

}  // namespace

Character::Character(GroupPtr group, std::vector<Cyc> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
    if (values_.size() != group_->conjugacy_classes().size())
        throw std::invalid_argument("character: one value per conjugacy class required");
    values_ = embed_all(std::move(values_), values_conductor(values_));
}

Character Character::of(const Rep& rho) {
    std::vector<Cyc> vals;
    for (int e : rho.group->class_reps()) vals.push_back(rho.at(e).trace());
    return Character(rho.group, std::move(vals));
}

const Cyc& Character::degree() const { return values_[group_->class_of()[0]]; }

Character Character::conj() const {
    std::vector<Cyc> vals;
    for (const auto& v : values_) vals.push_back(v.conj());
    return Character(group_, std::move(vals));
}

Character Character::power_map(long k) const {
    std::vector<Cyc> vals;
    for (int e : group_->class_reps()) {
        int x = 0;  // identity
        long kk = mod_pos(k, static_cast<long>(group_->size()));
        for (long i = 0; i < kk; ++i) x = group_->compose_idx(x, e);
        vals.push_back(values_[group_->class_of()[x]]);
    }
    return Character(group_, vals);
}

Rational Character::inner(const Character& other) const {
    if (group_ != other.group_) throw std::invalid_argument("character: groups differ");
    long n = std::lcm(values_conductor(values_), values_conductor(other.values_));
    Cyc acc = Cyc::zero(n);
    const auto& classes = group_->conjugacy_classes();
    for (size_t c = 0; c < classes.size(); ++c) {
        Cyc term = values_[c].embedded(n) * other.values_[c].conj().embedded(n);
        acc += Rational(static_cast<long>(classes[c].size())) * term;
    }
    Cyc avg = Rational(1, static_cast<long>(group_->size())) * acc;
    if (!avg.is_rational()) throw std::logic_error("character: non-rational inner product");
    return avg.to_rational();
}

bool Character::rational_integer_valued() const {
    for (const auto& v : values_) {
        if (!v.is_rational()) return false;
        Rational x = v.to_rational();
        if (x.get_den() != 1) return false;
    }
    return true;
}

bool Character::pm_one_valued() const {
    for (const auto& v : values_) {
        if (!v.is_rational()) return false;
        Rational x = v.to_rational();
        if (x != 1 && x != -1) return false;
    }
    return true;
}

Character operator*(const Character& a, const Character& b) {
    if (a.group_ != b.group_) throw std::invalid_argument("character: groups differ");
    long n = std::lcm(values_conductor(a.values_), values_conductor(b.values_));
    std::vector<Cyc> vals;
    for (size_t c = 0; c < a.values_.size(); ++c)
        vals.push_back(a.values_[c].embedded(n) * b.values_[c].embedded(n));
    return Character(a.group_, std::move(vals));
}

bool operator==(const Character& a, const Character& b) {
    if (a.group_ != b.group_ || a.values_.size() != b.values_.size()) return false;
    for (size_t c = 0; c < a.values_.size(); ++c)
        if (!value_equal(a.values_[c], b.values_[c])) return false;
    return true;
}

Rep seminormal_rep(GroupPtr ambient, const Multipartition& shape) {
    const auto& p = ambient->params();
    if (!p || p->e != 1) throw std::invalid_argument("seminormal_rep: ambient must be G(m,1,r)");
    if (shape.components() != p->level() || shape.total() != p->r)
        throw std::invalid_argument("seminormal_rep: shape does not match the group");
    auto model = std::make_shared<AmbientModel>(shape);
    Rep rho;
    rho.group = ambient;
    rho.conductor = model->level();
    rho.dim = model->dim();
    rho.label = shape.label();
    rho.eval = [model](const Monomial& g) { return (*model)(g); };
    rho.gen_images = detail::images_at_generators(ambient, rho.eval);
    rho.model = model;
    return rho;
}

Rep dual_rep(const Rep& rho) {
    const long level = rho.group->level();
    auto inner_eval = rho.eval;
    Rep out;
    out.group = rho.group;
    out.conductor = rho.conductor;
    out.dim = rho.dim;
    out.label = rho.label + "*";
    out.eval = [inner_eval, level](const Monomial& g) {
        return inner_eval(inverse(g, level)).transpose();
    };
    out.gen_images = detail::images_at_generators(out.group, out.eval);
    return out;
}

Rep tensor_linear(const Rep& rho, const Rep& eta) {
    if (eta.dim != 1) throw std::invalid_argument("tensor_linear: second factor must have degree 1");
    if (rho.group != eta.group) throw std::invalid_argument("tensor_linear: groups differ");
    const long n = std::lcm(rho.conductor, eta.conductor);
    auto re = rho.eval;
    auto ee = eta.eval;
    Rep out;
    out.group = rho.group;
    out.conductor = n;
    out.dim = rho.dim;
    out.label = rho.label + "x" + eta.label;
    out.eval = [re, ee, n](const Monomial& g) {
        Cyc s = ee(g)(0, 0).embedded(n);
        return s * embed_mat(re(g), n);
    };
    out.gen_images = detail::images_at_generators(out.group, out.eval);
    return out;
}

Rep exterior_rep(const Rep& rho, int k) {
    auto re = rho.eval;
    Rep out;
    out.group = rho.group;
    out.conductor = rho.conductor;
    out.dim = static_cast<int>(k_subsets(rho.dim, k).size());
    out.label = "L" + std::to_string(k) + "(" + rho.label + ")";
    out.eval = [re, k](const Monomial& g) { return exterior_power(re(g), k); };
    out.gen_images = detail::images_at_generators(out.group, out.eval);
    return out;
}

Character sym2_character(const Character& chi) {
    Character sq = chi * chi;
    Character pm = chi.power_map(2);
    long n = std::lcm(values_conductor(sq.values()), values_conductor(pm.values()));
    std::vector<Cyc> vals;
    for (size_t c = 0; c < sq.values().size(); ++c)
        vals.push_back(Rational(1, 2) * (sq.values()[c].embedded(n) + pm.values()[c].embedded(n)));
    return Character(chi.group(), std::move(vals));
}

Character alt2_character(const Character& chi) {
    Character sq = chi * chi;
    Character pm = chi.power_map(2);
    long n = std::lcm(values_conductor(sq.values()), values_conductor(pm.values()));
    std::vector<Cyc> vals;
    for (size_t c = 0; c < sq.values().size(); ++c)
        vals.push_back(Rational(1, 2) * (sq.values()[c].embedded(n) - pm.values()[c].embedded(n)));
    return Character(chi.group(), std::move(vals));
}

BilinearType bilinear_type(const Character& chi, const Character& eta) {
    const GroupPtr& W = chi.group();
    std::vector<Cyc> sign_vals;
    for (int rep : W->class_reps()) sign_vals.push_back(Cyc(static_cast<long>(W->sign(rep))));
    Character target = Character(W, std::move(sign_vals)) * eta;
    Character dual = chi.conj();
    Rational sym = sym2_character(dual).inner(target);
    Rational alt = alt2_character(dual).inner(target);
    if (sym + alt > 1) throw std::logic_error("bilinear_type: multiplicity exceeds 1");
    if (sym == 1) return BilinearType::symmetric;
    if (alt == 1) return BilinearType::alternating;
    return BilinearType::none;
}

Character exterior_character(const Character& chi, int k) {
    const size_t nc = chi.values().size();
    std::vector<Character> power;  // power[j] = values at g^(j+1)
    for (int j = 1; j <= k; ++j) power.push_back(chi.power_map(j));
    long n = 1;
    for (const auto& p : power) n = std::lcm(n, values_conductor(p.values()));
    std::vector<std::vector<Cyc>> e;  // elementary symmetric characters
    e.push_back(std::vector<Cyc>(nc, Cyc::one(n)));
    for (int deg = 1; deg <= k; ++deg) {
        std::vector<Cyc> row(nc, Cyc::zero(n));
        for (size_t c = 0; c < nc; ++c) {
            Cyc acc = Cyc::zero(n);
            for (int i = 1; i <= deg; ++i) {
                Cyc term = e[deg - i][c] * power[i - 1].values()[c].embedded(n);
                if (i % 2 == 0) term = -term;
                acc += term;
            }
            row[c] = Rational(1, deg) * acc;
        }
        e.push_back(std::move(row));
    }
    return Character(chi.group(), e[k]);
}

int find_character(const std::vector<Character>& table, const Character& chi) {
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == chi) return static_cast<int>(i);
    return -1;
}

Monomial embed_corank1(const Monomial& g) {
    Monomial out = g;
    out.perm.push_back(g.rank());
    out.exps.push_back(0);
    return out;
}

std::vector<long> restriction_multiplicities(const Character& chi, GroupPtr sub,
                                             const std::vector<Character>& sub_table) {
    const auto& big = chi.group();
    std::vector<Cyc> vals;
    for (int e : sub->class_reps()) {
        int idx = big->index_of(embed_corank1(sub->element(e)));
        if (idx < 0) throw std::invalid_argument("restriction: subgroup element not in the group");
        vals.push_back(chi.at_element(idx));
    }
    Character res(sub, std::move(vals));
    std::vector<long> mult;
    for (const auto& irr : sub_table) {
        Rational m = res.inner(irr);
        if (m.get_den() != 1 || m < 0) throw std::logic_error("restriction: bad multiplicity");
        mult.push_back(m.get_num().get_si());
    }
    return mult;
}

}  // namespace reflie
