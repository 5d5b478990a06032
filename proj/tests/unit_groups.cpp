#include <random>
#include <set>

#include "doctest.h"

#include "reflie/groups.hpp"

using namespace reflie;

namespace {
std::mt19937 rng(20240812);
}

TEST_CASE("series orders") {
    CHECK(Group::make({1, 1, 3})->size() == 6);
    CHECK(Group::make({1, 3, 3})->size() == 54);
    CHECK(Group::make({2, 2, 2})->size() == 16);  // G(4,2,2)
    for (long d = 1; d <= 2; ++d)
        for (long e = 1; e <= 5; ++e)
            for (long r = 1; r <= 4; ++r) {
                GroupParams p{d, e, r};
                if (p.level() == 1 && r == 1) continue;            // degenerate
                if (p.level() == 2 && e == 2 && r == 2) continue;  // reducible
                if (p.order() > 10000) continue;
                auto W = Group::make(p);
                CHECK(W->size() == p.order());
                // distinctness is guaranteed by the index map; spot-check closure
                std::uniform_int_distribution<int> pick(0, static_cast<int>(W->size()) - 1);
                for (int k = 0; k < 20; ++k) {
                    int a = pick(rng), b = pick(rng);
                    CHECK(W->compose_idx(a, b) >= 0);
                    CHECK(W->inverse_idx(a) >= 0);
                }
            }
}

TEST_CASE("order formula overflow guard") {
    CHECK_THROWS_AS(Group::make({2, 5, 4}), CapExceeded);
    CHECK(GroupParams({2, 5, 4}).order() == 48000);
}

TEST_CASE("reflections and classes") {
    auto S3 = Group::make({1, 1, 3});
    CHECK(S3->reflections().elements.size() == 3);
    CHECK(S3->reflections().classes.size() == 1);

    CHECK(Group::make({1, 3, 3})->reflections().classes.size() == 1);
    CHECK(Group::make({1, 4, 2})->reflections().classes.size() == 2);
    CHECK(Group::make({2, 1, 3})->reflections().classes.size() == 2);

    for (auto params : {GroupParams{1, 2, 3}, GroupParams{1, 4, 3}, GroupParams{2, 2, 3}}) {
        auto W = Group::make(params);
        const auto& refl = W->reflections();
        for (int idx : refl.elements) {
            // involutive and fixing a hyperplane
            CHECK(W->compose_idx(idx, idx) == W->index_of(Monomial::id(W->rank())));
            Mat<Cyc> m = to_matrix(W->element(idx), W->level());
            int moved = 0;
            Mat<Cyc> diff = m - Mat<Cyc>::identity(m.rows(), Cyc::zero(W->level()));
            // rank of (m - id) is 1: all 2x2 minors vanish but the matrix is nonzero
            bool nonzero = !diff.is_zero();
            CHECK(nonzero);
            for (int a = 0; a < m.rows(); ++a)
                for (int b = a + 1; b < m.rows(); ++b)
                    for (int c = 0; c < m.cols(); ++c)
                        for (int dd = c + 1; dd < m.cols(); ++dd)
                            CHECK(diff(a, c) * diff(b, dd) - diff(a, dd) * diff(b, c) ==
                                  Cyc::zero(W->level()));
            (void)moved;
        }
        // classes closed under conjugation
        std::vector<int> class_of(W->size(), -1);
        for (size_t c = 0; c < refl.classes.size(); ++c)
            for (int idx : refl.classes[c]) class_of[idx] = static_cast<int>(c);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(W->size()) - 1);
        for (int k = 0; k < 50; ++k) {
            int g = pick(rng);
            for (int idx : refl.elements) {
                int conj = W->compose_idx(W->compose_idx(g, idx), W->inverse_idx(g));
                CHECK(class_of[conj] == class_of[idx]);
            }
        }
    }
}

TEST_CASE("sign character") {
    auto W = Group::make({1, 2, 4});
    int id = W->index_of(Monomial::id(4));
    CHECK(W->sign(id) == 1);
    for (int idx : W->reflections().elements) CHECK(W->sign(idx) == -1);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(W->size()) - 1);
    for (int k = 0; k < 200; ++k) {
        int a = pick(rng), b = pick(rng);
        CHECK(W->sign(W->compose_idx(a, b)) == W->sign(a) * W->sign(b));
    }
}

TEST_CASE("word factorization round trip") {
    for (auto params : {GroupParams{1, 1, 4}, GroupParams{2, 1, 3}, GroupParams{1, 3, 3},
                        GroupParams{2, 2, 3}}) {
        auto W = Group::make(params);
        const long level = W->level();
        for (const auto& g : W->elements()) {
            Word w = word_factor(g, level);
            CHECK(evaluate_word(w, W->rank(), level) == g);
        }
    }
    // named cases
    CHECK(word_factor(Monomial::id(3), 4).empty());
    Monomial t = Monomial::t_gen(3);
    Word wt = word_factor(t, 4);
    REQUIRE(wt.size() == 1);
    CHECK(wt[0].diagonal);
    CHECK(wt[0].index == 1);
    CHECK(wt[0].power == 1);
}

TEST_CASE("subgroups") {
    auto W = Group::make({1, 3, 3});
    // s1..s_{r-2} and s'_1 generate the corank-1 reflection subgroup
    std::vector<Monomial> gens;
    for (const auto& [name, g] : W->generators())
        if (name == "s1" || name == "s1'") gens.push_back(g);
    auto W0 = Group::make_subgroup(*W, gens);
    CHECK(W0->size() == GroupParams({1, 3, 2}).order());

    auto empty = Group::make_subgroup(*W, {});
    CHECK(empty->size() == 1);

    // G(2e,2e,r) has index 2 in G(2e,e,r)
    auto big = Group::make({2, 2, 3});  // G(4,2,3)
    std::vector<Monomial> sub;
    for (const auto& g : big->elements())
        if (t_degree(g, big->level()) % 4 == 0) sub.push_back(g);
    auto small = Group::make_subgroup(*big, sub);
    CHECK(small->size() * 2 == big->size());
    CHECK(small->size() == GroupParams({1, 4, 3}).order());
}

TEST_CASE("conjugacy class partition") {
    auto W = Group::make({2, 1, 2});
    size_t total = 0;
    for (const auto& cls : W->conjugacy_classes()) total += cls.size();
    CHECK(total == W->size());
    CHECK(W->conjugacy_classes().size() == 5);  // B2 has 5 classes
    // class_of and class_reps agree
    for (size_t c = 0; c < W->conjugacy_classes().size(); ++c)
        CHECK(W->class_of()[W->class_reps()[c]] == static_cast<int>(c));
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(GroupParams({1, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams({1, 2, 2}).validate(), std::invalid_argument);  // G(2,2,2)
    CHECK_THROWS_AS(GroupParams({0, 1, 3}).validate(), std::invalid_argument);
}
