#pragma once

// Lie closures of generator sets inside matrix algebras, over any exact
// scalar field. The closure basis is kept in row echelon form over the
// flattened matrices; by the Jacobi identity the subalgebra generated by a
// set is spanned by left-normed brackets, so each new basis element only
// needs bracketing against the original generators. Elements may be tuples
// of blocks (one per representation) so that the algebra acting jointly on
// a sum of modules can be closed at the same cost.

#include "reflie/classify.hpp"
#include "reflie/echelon.hpp"

namespace reflie {

template <class T>
std::vector<T> flatten_blocks(const std::vector<Mat<T>>& blocks) {
    std::vector<T> v;
    for (const auto& b : blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
    return v;
}

template <class T>
std::vector<Mat<T>> unflatten_blocks(const std::vector<T>& v, const std::vector<Mat<T>>& shape) {
    std::vector<Mat<T>> out;
    size_t k = 0;
    for (const auto& s : shape) {
        Mat<T> b(s.rows(), s.cols(), zero_like(v.front()));
        for (int i = 0; i < s.rows(); ++i)
            for (int j = 0; j < s.cols(); ++j) b(i, j) = v[k++];
        out.push_back(std::move(b));
    }
    return out;
}

// Basis of the smallest Lie algebra containing the generators, as reduced
// echelon representatives. Runs to the bracket fixed point: no early exit,
// so the returned dimension is the closure dimension, not a bound.
template <class T>
std::vector<std::vector<Mat<T>>> block_bracket_closure(
    const std::vector<std::vector<Mat<T>>>& gens) {
    std::vector<std::vector<Mat<T>>> basis;
    SpanBasis<T> span;
    auto take = [&](const std::vector<Mat<T>>& el) {
        std::vector<T> v = flatten_blocks(el);
        span.reduce(v);
        bool fresh = false;
        for (const auto& x : v)
            if (!(x == zero_like(x))) {
                fresh = true;
                break;
            }
        if (!fresh) return;
        detail::strip_content(v);
        std::vector<Mat<T>> reduced = unflatten_blocks(v, el);
        span.insert(std::move(v));
        basis.push_back(std::move(reduced));
    };
    for (const auto& g : gens) take(g);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (const auto& g : gens) {
            std::vector<Mat<T>> c;
            c.reserve(g.size());
            for (size_t b = 0; b < g.size(); ++b) c.push_back(commutator(g[b], basis[i][b]));
            take(c);
        }
    }
    return basis;
}

template <class T>
std::vector<Mat<T>> bracket_closure(const std::vector<Mat<T>>& gens) {
    std::vector<std::vector<Mat<T>>> wrapped;
    for (const auto& g : gens) wrapped.push_back({g});
    std::vector<Mat<T>> out;
    for (auto& el : block_bracket_closure(wrapped)) out.push_back(std::move(el.front()));
    return out;
}

struct RepClosureDims {
    int full = 0;     // dim of the closure of the reflection images
    int derived = 0;  // dim once the class-average scalar is removed
};

// Exact closure dimensions of one irreducible's reflection images; checks
// that each reflection class sum acts as the predicted scalar.
RepClosureDims rep_closure_dims(const Rep& rho);

// The same dimensions over F_p; throws BadPrime when p meets a denominator.
RepClosureDims rep_closure_dims_mod_p(const Rep& rho, std::uint32_t p);

struct JointClosure {
    int full = 0;
    int derived = 0;
};

// Closure of the reflection images acting jointly on the sum of all
// irreducibles: the faithful realization of the full algebra and its
// derived subalgebra.
JointClosure joint_closure(const Classification& cls);

struct CenterReport {
    int reflection_classes = 0;
    bool class_sums_in_closure = false;
    bool class_sums_central = false;
    bool dims_match = false;  // full - derived == number of reflection classes
    int full = 0, derived = 0;
};

CenterReport center_check(const Classification& cls);

struct CompactSplitReport {
    int full = 0;
    int plus = 0;   // dim of the intersection with the span of det = +1 elements
    int minus = 0;  // same for det = -1
    bool split = false;
};

CompactSplitReport compact_split_check(const Classification& cls);

}  // namespace reflie
