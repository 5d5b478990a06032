#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "reflie/multipartition.hpp"

using namespace reflie;

namespace {

Multipartition mp(std::vector<Partition> parts) { return Multipartition{std::move(parts)}; }

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("partition enumeration") {
    // p(n) for n = 0..10
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<size_t>(expected[n]));
    for (const auto& p : partitions_of(8)) {
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
        CHECK(std::accumulate(p.begin(), p.end(), 0) == 8);
        for (int part : p) CHECK(part > 0);
        // conjugation is an involution
        CHECK(conjugate_partition(conjugate_partition(p)) == p);
    }
    CHECK(conjugate_partition({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate_partition({}) == Partition{});
}

TEST_CASE("multipartition enumeration and counters") {
    // number of pairs of partitions with n boxes total
    CHECK(multipartitions(2, 0).size() == 1);
    CHECK(multipartitions(2, 1).size() == 2);
    CHECK(multipartitions(2, 2).size() == 5);
    CHECK(multipartitions(2, 3).size() == 10);
    CHECK(multipartitions(3, 2).size() == 9);

    auto all = multipartitions(3, 3);
    std::set<std::string> labels;
    for (const auto& m : all) {
        CHECK(m.components() == 3);
        CHECK(m.total() == 3);
        labels.insert(m.label());
    }
    CHECK(labels.size() == all.size());  // labels are injective

    Multipartition x = mp({{2, 1}, {}, {1}});
    CHECK(x.total() == 4);
    CHECK(x.support() == 2);
    CHECK(x.corners() == 3);
    CHECK(x.label() == "([2,1],[],[1])");
    CHECK(mp({{}, {}}).corners() == 0);
}

TEST_CASE("shifts, stabilizers, canonical representatives") {
    Multipartition x = mp({{1}, {1}, {1}});
    CHECK(x.shifted(1) == x);
    CHECK(aut_order(x, 1) == 3);

    Multipartition y = mp({{2}, {}, {2}, {}});
    CHECK(y.shifted(2) == y);
    CHECK(y.shifted(1) != y);
    CHECK(aut_order(y, 1) == 2);
    CHECK(aut_order(y, 2) == 2);

    Multipartition z = mp({{2, 1}, {}, {}});
    CHECK(aut_order(z, 1) == 1);
    CHECK(canonical_shift(z, 1) == mp({{}, {}, {2, 1}}));

    // shifting component i to i + k: the box in component 0 lands in component k
    Multipartition w = mp({{1}, {}, {}, {}});
    CHECK(w.shifted(1) == mp({{}, {1}, {}, {}}));
    CHECK(w.shifted(-1) == mp({{}, {}, {}, {1}}));

    // stabilizer order divides both the number of components and the box count
    for (const auto& m : multipartitions(4, 4)) {
        long a = aut_order(m, 1);
        CHECK(4 % a == 0);
        if (m.total() > 0) CHECK(m.total() % a == 0);
        CHECK(canonical_shift(canonical_shift(m, 1), 1) == canonical_shift(m, 1));
        long b = aut_order(m, 2);
        CHECK(a % b == 0 || b % a == 0);  // both divide 4; spot containment
    }
}

TEST_CASE("standard fillings") {
    CHECK(standard_count(mp({{1}, {1}, {1}})) == 6);
    CHECK(standard_count(mp({{2}, {2}})) == 6);
    CHECK(standard_count(mp({{2, 1}, {1}})) == 8);
    CHECK(standard_count(mp({{2, 1}})) == 2);
    CHECK(standard_count(mp({{}})) == 1);

    // hook count agrees with explicit enumeration on every tuple up to 5 boxes
    for (int c = 1; c <= 3; ++c)
        for (int n = 0; n <= 5 - c; ++n)
            for (const auto& m : multipartitions(c, n)) {
                auto tabs = standard_tableaux(m);
                CHECK(standard_count(m) == static_cast<long>(tabs.size()));
                std::set<Tableau> distinct(tabs.begin(), tabs.end());
                CHECK(distinct.size() == tabs.size());
                for (const auto& t : tabs) {
                    CHECK(static_cast<int>(t.size()) == m.total());
                    // rows increase rightwards, columns increase downwards
                    std::map<std::array<int, 3>, int> entry;
                    for (int k = 0; k < static_cast<int>(t.size()); ++k) entry[t[k]] = k + 1;
                    for (const auto& [box, val] : entry) {
                        auto right = box, below = box;
                        ++right[2];
                        ++below[1];
                        if (entry.count(right)) CHECK(entry[right] > val);
                        if (entry.count(below)) CHECK(entry[below] > val);
                    }
                }
            }

    // single column and single row have exactly one filling
    CHECK(standard_count(mp({{1, 1, 1, 1}})) == 1);
    CHECK(standard_count(mp({{4}})) == 1);
    // all boxes in distinct components: the fillings are the orderings
    CHECK(standard_count(mp({{1}, {1}, {1}, {1}})) == factorial(4));

    // contents: box {component,row,col} has content col - row
    CHECK(content({0, 0, 0}) == 0);
    CHECK(content({1, 2, 0}) == -2);
    CHECK(content({0, 0, 3}) == 3);
}
