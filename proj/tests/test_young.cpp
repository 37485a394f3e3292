#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ale/young.hpp"

using namespace ale;

TEST_CASE("box statistics in the column convention") {
    Partition box({1});
    auto s = box_stats(box, box, 1, 1);
    CHECK(s.arm == 0);
    CHECK(s.leg == 0);
    CHECK(s.armColength == 0);
    CHECK(s.legColength == 0);

    Partition p21({2, 1});
    auto t = box_stats(p21, p21, 1, 1);
    CHECK(t.arm == 1);
    CHECK(t.leg == 1);

    // foreign leg against the empty tableau is negative
    auto f = box_stats(box, Partition(), 1, 1);
    CHECK(f.leg == -1);

    CHECK_THROWS_AS(box_stats(box, box, 2, 1), BoxOutsideTableau);
}

TEST_CASE("conjugation and the hook split A + A' + 1 = lambda_i") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(p.conjugate().weight() == p.weight());
            for (int i = 1; i <= p.num_columns(); ++i)
                for (int j = 1; j <= p.col(i); ++j) {
                    CHECK(arm(p, i, j) + (j - 1) + 1 == p.col(i));
                    CHECK(leg(p, i, j) + (i - 1) + 1 == p.row(j));
                }
        }
}

TEST_CASE("partition counts") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
    // each exactly once
    auto ps = enumerate_partitions(8);
    for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
}

TEST_CASE("tuple enumeration matches the product generating function") {
    CHECK(enumerate_young_tuples(2, 1).size() == 2);
    CHECK(enumerate_young_tuples(3, 2).size() == 9);
    CHECK(enumerate_young_tuples(1, 5).size() == 7);
    for (int k = 1; k <= 4; ++k) {
        auto counts = tuple_counts(k, 8);
        for (int n = 0; n <= 8; ++n) {
            auto tuples = enumerate_young_tuples(k, n);
            CHECK(static_cast<long long>(tuples.size()) == counts[n]);
            for (const auto& t : tuples) {
                CHECK(static_cast<int>(t.size()) == k);
                CHECK(tuple_weight(t) == n);
            }
        }
    }
}
