#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "crankmex/partition.hpp"

using namespace crankmex;

TEST_CASE("construction canonicalizes and validates") {
    CHECK(Partition({2, 3, 1, 2}).parts() == std::vector<int>{3, 2, 2, 1});
    CHECK(Partition({8}).parts() == std::vector<int>{8});
    CHECK(Partition({1, 1, 1, 1, 1, 1, 1, 1}) == Partition::all_ones(8));
    CHECK(Partition({2, 3, 1, 2}).n() == 8);
    CHECK_THROWS_WITH_AS(Partition({}), "empty partition rejected", std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("statistics on the worked examples") {
    Partition p511({5, 1, 1});
    CHECK(omega(p511) == 2);
    CHECK(mu(p511) == 1);
    CHECK(crank(p511) == -1);
    CHECK(mex(p511) == 2);
    CHECK(beta(p511) == 1);

    Partition p8({8});
    CHECK(omega(p8) == 0);
    CHECK(mu(p8) == 1);
    CHECK(crank(p8) == 8);
    CHECK(mex(p8) == 1);
    CHECK(beta(p8) == 1);

    Partition ones = Partition::all_ones(8);
    CHECK(omega(ones) == 8);
    CHECK(mu(ones) == 0);
    CHECK(crank(ones) == -8);
    CHECK(mex(ones) == 2);
    CHECK(beta(ones) == 0);

    CHECK(crank(Partition({4, 2, 1})) == 1);
    CHECK(crank(Partition({3, 3, 1})) == 1);
    CHECK(crank(Partition({3, 2, 1, 1})) == -1);
    CHECK(mex(Partition({3, 3, 2, 1})) == 4);
    CHECK(beta(Partition({3, 2, 1, 1})) == 2);
}

TEST_CASE("durfee and fixed points") {
    CHECK(durfee(Partition({3, 3, 2, 1})) == 2);
    CHECK(durfee(Partition({5, 2}), 1) == 1);
    CHECK(durfee(Partition::all_ones(8), 1) == 0);
    CHECK(durfee(Partition::all_ones(8)) == 1);

    CHECK(fixed_point(Partition({4, 2, 2})) == 2);
    CHECK_FALSE(fixed_point(Partition({6, 1, 1})).has_value());
    CHECK(fixed_point(Partition::all_ones(8)) == 1);

    CHECK(has_j_fixed_point(Partition({4, 3}), 1));
    CHECK_FALSE(has_j_fixed_point(Partition({5, 2}), 1));
    CHECK_FALSE(has_j_fixed_point(Partition({3, 3, 2, 1}), 0));
}

TEST_CASE("enumeration: order, count, uniqueness") {
    // A000041
    const long long p_of_n[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
                                231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958, 2436,
                                3010, 3718, 4565, 5604};
    for (int n = 1; n <= 30; ++n) {
        long long count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        CHECK(count == p_of_n[n]);
    }

    auto all8 = enumerate_partitions(8);
    CHECK(all8.size() == 22);
    CHECK(all8.front() == Partition({8}));
    CHECK(all8.back() == Partition::all_ones(8));
    // strictly decreasing lexicographically, hence no duplicates
    for (size_t i = 0; i + 1 < all8.size(); ++i) CHECK(all8[i].parts() > all8[i + 1].parts());
    CHECK(std::count(all8.begin(), all8.end(), Partition({3, 2, 2, 1})) == 1);

    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
    CHECK_THROWS_AS(PartitionGenerator(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(-3), std::invalid_argument);

    // the supported upper end of the enumeration budget
    long long count40 = 0;
    for_each_partition(40, [&](std::span<const int>) { ++count40; });
    CHECK(count40 == 37338);
}

TEST_CASE("class membership") {
    CHECK(member(Partition({2, 2, 2, 2}), {ClassTag::F, 4}));
    CHECK(member(Partition({2, 2, 2, 2}), {ClassTag::Fstar, 4}));
    CHECK(member(Partition({6, 1, 1}), {ClassTag::MNeg, 1}));
    CHECK(member(Partition::all_ones(8), {ClassTag::Fstar, 1}));
    CHECK_FALSE(member(Partition::all_ones(8), {ClassTag::Fstar, 2}));
    // F(n,1) is empty; F*(n,1) holds only the all-ones partition
    CHECK_FALSE(member(Partition({2, 1, 1}), {ClassTag::Fstar, 1}));
    CHECK_FALSE(member(Partition({2, 1, 1}), {ClassTag::F, std::nullopt}));
    CHECK(member(Partition({3, 3, 2, 1}), {ClassTag::Xe, std::nullopt}));
    CHECK(member(Partition({3, 3, 2, 1}), {ClassTag::Xe, 3}));
    CHECK_FALSE(member(Partition({3, 3, 2, 1}), {ClassTag::Xe, 2}));
    CHECK(member(Partition({5}), {ClassTag::Xo, 1}));
    CHECK(member(Partition({4, 1}), {ClassTag::MZero, 1}));
    CHECK(member(Partition({4, 1}), {ClassTag::MNonneg, 1}));
    CHECK(member(Partition({4, 1}), {ClassTag::MNonpos, 1}));
    CHECK(member(Partition({5, 2}), {ClassTag::G1, std::nullopt}));
    CHECK_FALSE(member(Partition({4, 3}), {ClassTag::G1, std::nullopt}));
    CHECK(member(Partition({6, 1, 1}), {ClassTag::G, std::nullopt}));
    CHECK(member(Partition({6, 1, 1}), {ClassTag::P, 1}));
}

TEST_CASE("count tables reproduce the n=8 and n=9 block sizes") {
    const PartitionClassId classes[] = {
        {ClassTag::Xe, std::nullopt}, {ClassTag::Fstar, std::nullopt},
        {ClassTag::MNeg, std::nullopt}, {ClassTag::MPos, std::nullopt},
    };
    CountTable t8 = count_classes(8, classes);
    CHECK(t8.count(ClassTag::Xe, 0) == 1);
    CHECK(t8.count(ClassTag::Xe, 1) == 5);
    CHECK(t8.count(ClassTag::Xe, 2) == 3);
    CHECK(t8.count(ClassTag::Xe, 3) == 1);
    CHECK(t8.count(ClassTag::Xe, 4) == 0);
    CHECK(t8.max_param(ClassTag::Xe) == 3);
    CHECK(t8.count(ClassTag::MPos, 1) == 1);
    CHECK(t8.count(ClassTag::MPos, 2) == 5);
    CHECK(t8.count(ClassTag::MPos, 3) == 3);
    CHECK(t8.count(ClassTag::MPos, 4) == 1);
    CHECK(t8.count(ClassTag::Fstar, 1) == 1);
    CHECK(t8.count(ClassTag::Fstar, 2) == 5);

    CountTable t9 = count_classes(9, classes);
    CHECK(t9.count(ClassTag::Xe, 0) == 1);
    CHECK(t9.count(ClassTag::Xe, 1) == 6);
    CHECK(t9.count(ClassTag::Xe, 2) == 5);
    CHECK(t9.count(ClassTag::Xe, 3) == 2);
    CHECK(t9.total(ClassTag::Xe) == 14);
}

TEST_CASE("statistic identities hold on every partition up to 20") {
    for (int n = 1; n <= 20; ++n) {
        for_each_partition(n, [&](std::span<const int> parts) {
            CHECK(beta(parts) == static_cast<int>(parts.size()) - omega(parts));
            int hits = 0;
            for (size_t i = 0; i < parts.size(); ++i)
                if (parts[i] == static_cast<int>(i) + 1) ++hits;
            CHECK(hits <= 1);
            if (auto fp = fixed_point(parts)) CHECK(durfee(parts) == *fp);
            int d = durfee(parts);
            if (!fixed_point(parts) && d >= 1) CHECK(parts[static_cast<size_t>(d) - 1] > d);
        });
    }
}
