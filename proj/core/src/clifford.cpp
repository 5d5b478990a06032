// Restriction of seminormal models to the reflection subgroups G(de,e,r)
// and the full irreducible set built from it. Conjugation by the diagonal
// generator t twists a subgroup representation; on shapes the twist shifts
// diagram components by d, so a model restricts to aut-many irreducible
// summands, one per eigenvalue of the component-shift operator, and shapes
// in one shift orbit restrict identically.

#include <numeric>
#include <stdexcept>

#include "reflie/numtheory.hpp"

#include "rep_internal.hpp"

namespace reflie {

namespace {

// One summand: the eigenspace of the shift operator U v_T = v_(T shifted
// by b) with eigenvalue omega = zeta_A^j. The vectors w_x = sum_k
// omega^-k v_(orbit[x][k]) span it, and each w_x is the only one meeting
// the coordinate at its orbit representative, so matrix entries are read
// off the representative rows of the ambient matrix.
struct SplitData {
    ModelPtr model;
    std::vector<int> reps;                // orbit representatives (ambient indices)
    std::vector<std::vector<int>> orbit;  // [x][k] = index of the k-fold shift of reps[x]
    std::vector<Cyc> omega_inv;           // omega^-k for k = 0..A-1
};

Mat<Cyc> split_eval(const SplitData& sd, const Monomial& g) {
    Mat<Cyc> amb = (*sd.model)(g);
    const int n = static_cast<int>(sd.reps.size());
    const int a = static_cast<int>(sd.omega_inv.size());
    Mat<Cyc> out(n, n, Cyc::zero(sd.model->level()));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Cyc acc = Cyc::zero(sd.model->level());
            for (int k = 0; k < a; ++k) acc += sd.omega_inv[k] * amb(sd.reps[x], sd.orbit[y][k]);
            out(x, y) = acc;
        }
    return out;
}

std::vector<Rep> split_model(const ModelPtr& model, const GroupPtr& target) {
    const auto& tp = target->params();
    if (!tp) throw std::invalid_argument("split: target group lacks series parameters");
    if (tp->level() != model->level() || tp->r != model->rank())
        throw std::invalid_argument("split: target does not sit inside the model's wreath product");
    const long m = model->level();
    const long a = aut_order(model->shape(), tp->d);
    const long b = m / a;
    const int dim = model->dim();

    std::vector<int> shift(dim);
    for (int x = 0; x < dim; ++x) {
        Tableau t = model->tableaux()[x];
        for (auto& box : t) box[0] = static_cast<int>((box[0] + b) % m);
        shift[x] = model->tableau_index(t);
    }
    std::vector<int> reps;
    std::vector<std::vector<int>> orbit;
    std::vector<char> seen(dim, 0);
    for (int x = 0; x < dim; ++x) {
        if (seen[x]) continue;
        std::vector<int> orb;
        for (int y = x; !seen[y]; y = shift[y]) {
            seen[y] = 1;
            orb.push_back(y);
        }
        if (static_cast<long>(orb.size()) != a)
            throw std::logic_error("split: shift orbit of unexpected size");
        reps.push_back(x);
        orbit.push_back(std::move(orb));
    }

    std::vector<Rep> out;
    for (long j = 0; j < a; ++j) {
        auto sd = std::make_shared<SplitData>();
        sd->model = model;
        sd->reps = reps;
        sd->orbit = orbit;
        for (long k = 0; k < a; ++k) sd->omega_inv.push_back(Cyc::zeta(m, mod_pos(-b * j * k, m)));
        Rep rho;
        rho.group = target;
        rho.conductor = m;
        rho.dim = static_cast<int>(reps.size());
        rho.label = model->shape().label();
        if (a > 1) rho.label += "#" + std::to_string(j);
        rho.eval = [sd](const Monomial& g) { return split_eval(*sd, g); };
        rho.gen_images = detail::images_at_generators(target, rho.eval);
        if (a == 1) rho.model = model;
        out.push_back(std::move(rho));
    }
    return out;
}

}  // namespace

std::vector<Rep> clifford_components(const Rep& ambient_model, GroupPtr target) {
    if (!ambient_model.model)
        throw std::invalid_argument("clifford_components: representation is not a seminormal model");
    return split_model(ambient_model.model, target);
}

std::vector<Rep> irreps(GroupPtr W) {
    const auto& p = W->params();
    if (!p) throw std::invalid_argument("irreps: group lacks series parameters");
    const long m = p->level();
    std::vector<Rep> out;
    unsigned long long sq = 0;
    for (const auto& mp : multipartitions(static_cast<int>(m), static_cast<int>(p->r))) {
        if (!(canonical_shift(mp, p->d) == mp)) continue;
        auto model = std::make_shared<AmbientModel>(mp);
        for (Rep& rho : split_model(model, W)) {
            sq += static_cast<unsigned long long>(rho.dim) * rho.dim;
            out.push_back(std::move(rho));
        }
    }
    if (sq != W->size()) throw std::logic_error("irreps: dimension squares do not sum to the order");
    return out;
}

}  // namespace reflie
