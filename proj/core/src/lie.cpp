#include "reflie/lie.hpp"

#include <numeric>
#include <stdexcept>

#include "reflie/numtheory.hpp"
#include "reflie/primefield.hpp"

namespace reflie {

namespace {

Mat<Cyc> embed_mat_conductor(const Mat<Cyc>& m, long n) {
    Mat<Cyc> out(m.rows(), m.cols(), Cyc::zero(n));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embedded(n);
    return out;
}

// Images of the reflections under rho, and the traceless versions with the
// class-average scalar removed. Verifies that every reflection class sum
// acts as the scalar forced by the trace (it must, on an irreducible).
struct ReflectionImages {
    std::vector<Mat<Cyc>> full;
    std::vector<Mat<Cyc>> derived;
    long conductor = 1;
    bool any_nonzero_scalar = false;
};

ReflectionImages reflection_images(const Rep& rho, bool check_class_sums) {
    const Group& W = *rho.group;
    ReflectionImages out;
    for (const auto& cls : W.reflections().classes) {
        Mat<Cyc> sum(rho.dim, rho.dim, Cyc::zero(rho.conductor));
        Cyc chi = Cyc::zero(rho.conductor);
        for (int s : cls) {
            Mat<Cyc> img = rho.at(s);
            chi = img.trace().embedded(rho.conductor);
            if (check_class_sums) sum = sum + embed_mat_conductor(img, rho.conductor);
            Cyc scalar = chi / Cyc::from_rational(rho.conductor, Rational(rho.dim));
            Mat<Cyc> traceless = img;
            for (int i = 0; i < rho.dim; ++i) traceless(i, i) = traceless(i, i) - scalar;
            out.full.push_back(std::move(img));
            out.derived.push_back(std::move(traceless));
        }
        if (!chi.is_zero()) out.any_nonzero_scalar = true;
        if (check_class_sums) {
            Cyc want = rat(static_cast<long>(cls.size()), rho.dim) * chi;
            Mat<Cyc> expect(rho.dim, rho.dim, Cyc::zero(rho.conductor));
            for (int i = 0; i < rho.dim; ++i) expect(i, i) = want;
            if (sum != expect)
                throw std::logic_error("closure: reflection class sum is not the expected scalar");
        }
    }
    out.conductor = rho.conductor;
    return out;
}

bool all_rational(const std::vector<Mat<Cyc>>& ms) {
    for (const auto& m : ms)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_rational()) return false;
    return true;
}

Mat<Rational> to_rational_mat(const Mat<Cyc>& m) {
    Mat<Rational> out(m.rows(), m.cols(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_rational();
    return out;
}

Mat<Fp> to_fp_mat(const Mat<Cyc>& m, std::uint32_t p, Fp root, long n) {
    Mat<Fp> out(m.rows(), m.cols(), Fp(p, 0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = reduce_mod_p(m(i, j).embedded(n), p, root);
    return out;
}

// dim of the span of the closure basis extended by the untruncated
// generator images: the full algebra is the derived one plus the scalar
// parts, and that span is already bracket-closed.
template <class T>
RepClosureDims dims_from(const std::vector<Mat<T>>& full_gens,
                         const std::vector<Mat<T>>& derived_gens) {
    auto basis = bracket_closure(derived_gens);
    SpanBasis<T> span;
    for (const auto& b : basis) span.insert(flatten_blocks<T>({b}));
    RepClosureDims out;
    out.derived = span.dim();
    for (const auto& g : full_gens) span.insert(flatten_blocks<T>({g}));
    out.full = span.dim();
    return out;
}

}  // namespace

RepClosureDims rep_closure_dims(const Rep& rho) {
    ReflectionImages im = reflection_images(rho, true);
    if (all_rational(im.full) && all_rational(im.derived)) {
        std::vector<Mat<Rational>> f, d;
        for (const auto& m : im.full) f.push_back(to_rational_mat(m));
        for (const auto& m : im.derived) d.push_back(to_rational_mat(m));
        return dims_from(f, d);
    }
    std::vector<Mat<Cyc>> f, d;
    for (const auto& m : im.full) f.push_back(embed_mat_conductor(m, im.conductor));
    for (const auto& m : im.derived) d.push_back(embed_mat_conductor(m, im.conductor));
    return dims_from(f, d);
}

RepClosureDims rep_closure_dims_mod_p(const Rep& rho, std::uint32_t p) {
    ReflectionImages im = reflection_images(rho, false);
    Fp root = im.conductor == 1 ? Fp(p, 1) : element_of_order(p, im.conductor);
    std::vector<Mat<Fp>> f, d;
    for (const auto& m : im.full) f.push_back(to_fp_mat(m, p, root, im.conductor));
    for (const auto& m : im.derived) d.push_back(to_fp_mat(m, p, root, im.conductor));
    return dims_from(f, d);
}

namespace {

// Joint block elements: one block per irreducible, evaluated at a group
// element, optionally with the reflection-class scalar removed per block.
std::vector<std::vector<Mat<Cyc>>> joint_reflection_gens(const Classification& cls, bool derived,
                                                         long n) {
    const Group& W = *cls.group;
    std::vector<std::vector<Mat<Cyc>>> gens;
    for (int s : W.reflections().elements) {
        std::vector<Mat<Cyc>> blocks;
        for (size_t i = 0; i < cls.reps.size(); ++i) {
            Mat<Cyc> img = embed_mat_conductor(cls.reps[i].at(s), n);
            if (derived) {
                Cyc chi = cls.chars[i].at_element(s).embedded(n);
                Cyc scalar = chi / Cyc::from_rational(n, Rational(cls.reps[i].dim));
                for (int k = 0; k < cls.reps[i].dim; ++k) img(k, k) = img(k, k) - scalar;
            }
            blocks.push_back(std::move(img));
        }
        gens.push_back(std::move(blocks));
    }
    return gens;
}

long joint_conductor(const Classification& cls) {
    long n = 1;
    for (const auto& r : cls.reps) n = std::lcm(n, r.conductor);
    return n;
}

}  // namespace

JointClosure joint_closure(const Classification& cls) {
    const long n = joint_conductor(cls);
    JointClosure out;
    auto derived_basis = block_bracket_closure(joint_reflection_gens(cls, true, n));
    SpanBasis<Cyc> span;
    for (const auto& b : derived_basis) span.insert(flatten_blocks(b));
    out.derived = span.dim();
    for (const auto& g : joint_reflection_gens(cls, false, n)) span.insert(flatten_blocks(g));
    out.full = span.dim();
    return out;
}

CenterReport center_check(const Classification& cls) {
    const Group& W = *cls.group;
    const long n = joint_conductor(cls);
    CenterReport rep;
    rep.reflection_classes = static_cast<int>(W.reflections().classes.size());

    auto full_gens = joint_reflection_gens(cls, false, n);
    auto basis = block_bracket_closure(full_gens);
    SpanBasis<Cyc> span;
    for (const auto& b : basis) span.insert(flatten_blocks(b));
    rep.full = span.dim();

    auto derived_basis = block_bracket_closure(joint_reflection_gens(cls, true, n));
    rep.derived = static_cast<int>(derived_basis.size());
    rep.dims_match = rep.full - rep.derived == rep.reflection_classes;

    // reflection class sums: in the closure, and commuting with everything
    rep.class_sums_in_closure = true;
    rep.class_sums_central = true;
    std::vector<int> refl_index(W.size(), -1);
    const auto& refl = W.reflections().elements;
    for (size_t i = 0; i < refl.size(); ++i) refl_index[refl[i]] = static_cast<int>(i);
    for (const auto& c : W.reflections().classes) {
        std::vector<Mat<Cyc>> sum;
        for (size_t b = 0; b < cls.reps.size(); ++b)
            sum.push_back(Mat<Cyc>(cls.reps[b].dim, cls.reps[b].dim, Cyc::zero(n)));
        for (int s : c)
            for (size_t b = 0; b < sum.size(); ++b)
                sum[b] = sum[b] + full_gens[refl_index[s]][b];
        if (!span.contains(flatten_blocks(sum))) rep.class_sums_in_closure = false;
        for (const auto& el : basis) {
            bool zero = true;
            for (size_t b = 0; b < sum.size(); ++b)
                if (!commutator(sum[b], el[b]).is_zero()) {
                    zero = false;
                    break;
                }
            if (!zero) {
                rep.class_sums_central = false;
                break;
            }
        }
    }
    return rep;
}

CompactSplitReport compact_split_check(const Classification& cls) {
    const Group& W = *cls.group;
    const long n = joint_conductor(cls);
    CompactSplitReport rep;

    auto basis = block_bracket_closure(joint_reflection_gens(cls, false, n));
    SpanBasis<Cyc> closure_span;
    for (const auto& b : basis) closure_span.insert(flatten_blocks(b));
    rep.full = closure_span.dim();

    // dim(H meet S) = dim H + dim S - dim(H + S) for each half S of the
    // group algebra image, split by determinant sign
    for (int target_sign : {1, -1}) {
        SpanBasis<Cyc> half;
        SpanBasis<Cyc> joined;
        for (const auto& b : basis) joined.insert(flatten_blocks(b));
        for (size_t g = 0; g < W.size(); ++g) {
            if (W.sign(static_cast<int>(g)) != target_sign) continue;
            std::vector<Mat<Cyc>> blocks;
            for (const auto& r : cls.reps)
                blocks.push_back(embed_mat_conductor(r.at(static_cast<int>(g)), n));
            auto v = flatten_blocks(blocks);
            half.insert(v);
            joined.insert(std::move(v));
        }
        int meet = rep.full + half.dim() - joined.dim();
        (target_sign == 1 ? rep.plus : rep.minus) = meet;
    }
    rep.split = rep.plus + rep.minus == rep.full;
    return rep;
}

}  // namespace reflie
