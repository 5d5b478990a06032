#include "reflie/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace reflie {

namespace {

bool value_is(const Cyc& v, long x) { return v.is_rational() && v.to_rational() == x; }

bool value_abs_is(const Cyc& v, long x) {
    if (!v.is_rational()) return false;
    Rational a = v.to_rational();
    return a == x || a == -x;
}

// chi takes the value dim or dim-2 on every reflection class; since all
// reflections square to the identity, this pins their images to the
// identity or a genuine reflection.
bool reflection_character(const Character& chi, const std::vector<int>& refl_classes, long dim) {
    if (dim < 2) return false;
    for (int c : refl_classes) {
        const Cyc& v = chi.at_class(c);
        if (!value_is(v, dim) && !value_is(v, dim - 2)) return false;
    }
    return true;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::string lie_type_name(LieType t) {
    switch (t) {
        case LieType::sl: return "sl";
        case LieType::so: return "so";
        default: return "sp";
    }
}

long long lie_type_dim(LieType t, int n) {
    long long nn = n;
    switch (t) {
        case LieType::sl: return nn * nn - 1;
        case LieType::so: return nn * (nn - 1) / 2;
        default: return nn * (nn + 1) / 2;
    }
}

Classification classify(GroupPtr W) {
    const auto& p = W->params();
    if (!p) throw std::invalid_argument("classify: group lacks series parameters");
    if (p->d > 2) throw std::invalid_argument("classify: only 2-reflection groups (d <= 2)");

    Classification out;
    out.group = W;
    out.reps = irreps(W);
    for (const auto& r : out.reps) out.chars.push_back(Character::of(r));
    const int n = static_cast<int>(out.reps.size());

    for (const auto& cls : W->reflections().classes)
        out.reflection_classes.push_back(W->class_of()[cls.front()]);
    out.center_dim = static_cast<int>(out.reflection_classes.size());

    for (int i = 0; i < n; ++i) {
        if (out.reps[i].dim != 1) continue;
        out.degree_one.push_back(i);
        if (out.chars[i].pm_one_valued()) out.pm_chars.push_back(i);
    }
    if (out.pm_chars.size() != (size_t(1) << out.reflection_classes.size()))
        throw std::logic_error("classify: +-1 character count disagrees with reflection classes");

    // determinant character of the natural monomial matrices
    {
        std::vector<Cyc> vals;
        for (int e : W->class_reps()) vals.push_back(Cyc(static_cast<long>(W->sign(e))));
        Character det_chi(W, std::move(vals));
        out.eps = find_character(out.chars, det_chi);
        if (out.eps < 0) throw std::logic_error("classify: determinant character not found");
    }

    out.records.resize(n);
    for (int i = 0; i < n; ++i) {
        RepRecord& rec = out.records[i];
        rec.index = i;
        rec.label = out.reps[i].label;
        rec.dim = out.reps[i].dim;
        rec.reflection = reflection_character(out.chars[i], out.reflection_classes, rec.dim);
        for (int eta : out.degree_one) {
            if (reflection_character(out.chars[i] * out.chars[eta], out.reflection_classes,
                                     rec.dim)) {
                rec.quasi_reflection = true;
                break;
            }
        }
    }

    // twisted exterior powers of the reflection representations
    for (int i = 0; i < n; ++i) {
        if (out.records[i].dim == 1) {
            out.records[i].lambda_ref = true;
            out.records[i].lambda_base = 0;
        }
    }
    for (int ridx = 0; ridx < n; ++ridx) {
        if (!out.records[ridx].reflection) continue;
        const int base = out.records[ridx].dim;
        for (int k = 1; k < base; ++k) {
            Character lam = exterior_character(out.chars[ridx], k);
            for (int eta : out.degree_one) {
                int hit = find_character(out.chars, lam * out.chars[eta]);
                if (hit < 0) continue;
                RepRecord& rec = out.records[hit];
                if (rec.dim == 1) continue;
                if (rec.lambda_ref && rec.lambda_base != base)
                    throw std::logic_error("classify: exterior-power base dimension ambiguous");
                rec.lambda_ref = true;
                rec.lambda_base = base;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (out.records[i].quasi_reflection && !out.records[i].lambda_ref)
            throw std::logic_error("classify: twisted reflection rep missed the exterior list");

    // X(rho): +-1 characters allowed to twist rho, those whose -1 classes
    // act by a scalar in rho
    for (int i = 0; i < n; ++i) {
        for (int eta : out.pm_chars) {
            bool ok = true;
            for (int c : out.reflection_classes) {
                if (!value_is(out.chars[eta].at_class(c), -1)) continue;
                if (!value_abs_is(out.chars[i].at_class(c), out.records[i].dim)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.records[i].allowed_twists.push_back(eta);
        }
    }

    // twisted duality and the invariant pairing type
    for (int i = 0; i < n; ++i) {
        RepRecord& rec = out.records[i];
        Character dual_eps = out.chars[i].conj() * out.chars[out.eps];
        for (int eta : rec.allowed_twists) {
            if (dual_eps == out.chars[i] * out.chars[eta]) {
                if (rec.dual_twist >= 0)
                    throw std::logic_error("classify: twisted duality character not unique");
                rec.dual_twist = eta;
            }
        }
        if (rec.dual_twist < 0) {
            rec.type = LieType::sl;
        } else {
            Character target = out.chars[out.eps] * out.chars[rec.dual_twist];
            Rational sym = sym2_character(out.chars[i].conj()).inner(target);
            Rational alt = alt2_character(out.chars[i].conj()).inner(target);
            if (sym == 1 && alt == 0)
                rec.type = LieType::so;
            else if (sym == 0 && alt == 1)
                rec.type = LieType::sp;
            else
                throw std::logic_error("classify: invariant pairing neither symmetric nor alternating");
        }
        if (rec.dim == 1)
            rec.predicted_derived_dim = 0;
        else if (rec.lambda_ref)
            rec.predicted_derived_dim = static_cast<long long>(rec.lambda_base) * rec.lambda_base - 1;
        else
            rec.predicted_derived_dim = lie_type_dim(rec.type, rec.dim);
    }

    // classes under twisting and twisted duality
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        Character dual_eps = out.chars[i].conj() * out.chars[out.eps];
        for (int eta : out.records[i].allowed_twists) {
            int t1 = find_character(out.chars, out.chars[i] * out.chars[eta]);
            if (t1 >= 0) uf.join(i, t1);
            int t2 = find_character(out.chars, dual_eps * out.chars[eta]);
            if (t2 >= 0) uf.join(i, t2);
        }
    }
    std::vector<int> root_to_class(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (root_to_class[r] < 0) {
            root_to_class[r] = static_cast<int>(out.classes.size());
            out.classes.push_back({});
        }
        int c = root_to_class[r];
        out.classes[c].members.push_back(i);
        out.records[i].approx_class = c;
    }
    for (auto& cls : out.classes) {
        cls.rep = cls.members.front();
        for (int m : cls.members) {
            const auto& a = out.records[m];
            const auto& b = out.records[cls.rep];
            if (std::make_pair(a.dim, a.label) < std::make_pair(b.dim, b.label)) cls.rep = m;
        }
        const RepRecord& lead = out.records[cls.rep];
        for (int m : cls.members) {
            const RepRecord& rec = out.records[m];
            if (rec.dim != lead.dim || rec.quasi_reflection != lead.quasi_reflection ||
                rec.lambda_ref != lead.lambda_ref)
                throw std::logic_error("classify: twist class mixes representation kinds");
        }
        cls.quasi_reflection = lead.quasi_reflection;
        if (lead.dim == 1 || lead.lambda_ref) {
            // degree-1 and twisted exterior powers reuse an existing ideal
            cls.counted = lead.quasi_reflection && lead.dim > 1;
            cls.contribution = cls.counted ? lead.predicted_derived_dim : 0;
        } else {
            for (int m : cls.members)
                if (out.records[m].type != lead.type)
                    throw std::logic_error("classify: twist class mixes pairing types");
            cls.counted = true;
            cls.contribution = lead.predicted_derived_dim;
        }
        out.predicted_derived += cls.contribution;
    }
    std::sort(out.classes.begin(), out.classes.end(), [&](const ApproxClass& a, const ApproxClass& b) {
        const auto& ra = out.records[a.rep];
        const auto& rb = out.records[b.rep];
        return std::make_pair(ra.dim, ra.label) < std::make_pair(rb.dim, rb.label);
    });
    for (size_t c = 0; c < out.classes.size(); ++c)
        for (int m : out.classes[c].members) out.records[m].approx_class = static_cast<int>(c);

    out.predicted_total = out.center_dim + out.predicted_derived;
    return out;
}

}  // namespace reflie
