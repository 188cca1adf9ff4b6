#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "crankmex/bijections.hpp"
#include "crankmex/partition.hpp"

using namespace crankmex;

TEST_CASE("staircase reduction worked examples") {
    // (3,3,2,1) of 9: rule (ii) then rule (i), landing at (4,2,2)
    auto [mu1, trace1] = staircase_reduce(Partition({3, 3, 2, 1}));
    CHECK(mu1 == Partition({4, 2, 2}));
    REQUIRE(trace1.steps.size() == 3);
    CHECK(trace1.steps[0].rule == Rule::Split);
    CHECK(trace1.steps[0].state.staircase_j == 1);
    CHECK(trace1.steps[0].state.parts == std::vector<int>{3});
    CHECK(trace1.steps[1].rule == Rule::RuleII);
    CHECK(trace1.steps[1].state.parts == std::vector<int>{3, 3, 2});
    CHECK(trace1.steps[2].rule == Rule::RuleI);
    CHECK(trace1.steps[2].state.parts == std::vector<int>{4, 2, 2});

    // (4,3,1): one application of (i)
    auto [mu2, trace2] = staircase_reduce(Partition({4, 3, 1}));
    CHECK(mu2 == Partition({5, 2}));
    REQUIRE(trace2.steps.size() == 2);
    CHECK(trace2.steps[1].rule == Rule::RuleI);

    // (3,2,1,1,1) of 8: one application of (ii)
    auto [mu3, trace3] = staircase_reduce(Partition({3, 2, 1, 1, 1}));
    CHECK(mu3 == Partition({3, 2, 1, 1}));
    REQUIRE(trace3.steps.size() == 2);
    CHECK(trace3.steps[1].rule == Rule::RuleII);

    // all ones: empty iteration
    auto [mu4, trace4] = staircase_reduce(Partition::all_ones(8));
    CHECK(mu4 == Partition::all_ones(7));
    CHECK(trace4.steps.size() == 1);

    CHECK_THROWS_AS(staircase_reduce(Partition({8})), std::domain_error);  // mex 1
    CHECK_THROWS_AS(staircase_reduce(Partition({1})), std::domain_error);  // n = 1
}

TEST_CASE("g1 insertion worked examples") {
    CHECK(g1_insert(Partition({5, 2})) == Partition({4, 2, 2}));
    CHECK(g1_insert(Partition({4, 4})) == Partition({3, 3, 3}));
    CHECK(g1_insert(Partition::all_ones(7)) == Partition::all_ones(8));
    CHECK_THROWS_AS(g1_insert(Partition({4, 3})), std::domain_error);  // 1-fixed point at index 2
}

TEST_CASE("composed even-mex map and its inverse") {
    CHECK(even_mex_to_fixed_point(Partition({3, 2, 2, 1})).first == Partition({2, 2, 2, 2}));
    CHECK(even_mex_to_fixed_point(Partition({3, 3, 2, 1})).first == Partition({3, 2, 2, 2}));
    CHECK(even_mex_to_fixed_point(Partition({7, 1})).first == Partition({6, 2}));
    CHECK(even_mex_to_fixed_point(Partition({4, 4, 1})).first == Partition({3, 3, 3}));
    CHECK(even_mex_to_fixed_point(Partition({1})).first == Partition({1}));
    CHECK(even_mex_to_fixed_point(Partition::all_ones(8)).first == Partition::all_ones(8));

    CHECK(fixed_point_to_even_mex(Partition({6, 2})) == Partition({7, 1}));
    CHECK(fixed_point_to_even_mex(Partition({3, 3, 3})) == Partition({4, 4, 1}));
    CHECK(fixed_point_to_even_mex(Partition::all_ones(8)) == Partition::all_ones(8));
    CHECK_THROWS_AS(fixed_point_to_even_mex(Partition({6, 1, 1})), std::domain_error);  // not in F*
}

TEST_CASE("fixed point <-> negative crank") {
    CHECK(fixed_to_negcrank(Partition({4, 2, 2})) == Partition({4, 2, 1, 1}));
    CHECK(fixed_to_negcrank(Partition({2, 2, 2, 1, 1})) == Partition({2, 2, 1, 1, 1, 1}));
    CHECK(fixed_to_negcrank(Partition({6, 2})) == Partition({6, 1, 1}));
    CHECK_THROWS_AS(fixed_to_negcrank(Partition({8})), std::domain_error);               // no fixed point
    CHECK_THROWS_AS(fixed_to_negcrank(Partition::all_ones(8)), std::domain_error);       // beta 0
    CHECK_THROWS_WITH_AS(fixed_to_negcrank(Partition({8})), "not in F: no fixed point", std::domain_error);

    CHECK(negcrank_to_fixed(Partition({6, 1, 1})) == Partition({6, 2}));
    CHECK(negcrank_to_fixed(Partition({2, 2, 1, 1, 1, 1})) == Partition({2, 2, 2, 1, 1}));
    CHECK(negcrank_to_fixed(Partition::all_ones(8)) == Partition::all_ones(8));
    CHECK_THROWS_AS(negcrank_to_fixed(Partition({8})), std::domain_error);  // crank 8
}

TEST_CASE("negative <-> positive crank") {
    CHECK(neg_to_pos_crank(Partition({6, 1, 1})) == Partition({5, 2, 1}));
    CHECK(neg_to_pos_crank(Partition({4, 1, 1, 1, 1})) == Partition({4, 4}));
    CHECK(neg_to_pos_crank(Partition::all_ones(8)) == Partition({8}));
    CHECK_THROWS_AS(neg_to_pos_crank(Partition({4, 2, 1})), std::domain_error);  // crank 1
    CHECK_THROWS_AS(neg_to_pos_crank(Partition({1})), std::domain_error);        // degenerate

    CHECK(pos_to_neg_crank(Partition({5, 2, 1})) == Partition({6, 1, 1}));
    CHECK(pos_to_neg_crank(Partition({8})) == Partition::all_ones(8));
    CHECK(pos_to_neg_crank(Partition({2, 2, 2, 2})) == Partition({2, 2, 2, 1, 1}));
    CHECK_THROWS_AS(pos_to_neg_crank(Partition({4, 1})), std::domain_error);  // crank 0
}

TEST_CASE("the composed map does not negate the crank") {
    Partition witness({5, 1, 1, 1});
    CHECK(crank(witness) == -2);
    Partition image = neg_to_pos_crank(witness);
    CHECK(image == Partition({4, 3, 1}));
    CHECK(crank(image) == 1);
}

TEST_CASE("chain traces") {
    BijectionTrace chain = trace_chain(Partition({4, 4, 1}));
    REQUIRE(chain.steps.size() >= 3);
    auto last = chain.steps.end();
    CHECK((last - 1)->rule == Rule::CrankNegToPos);
    CHECK((last - 1)->state.parts == std::vector<int>{3, 3, 3});
    CHECK((last - 2)->rule == Rule::FpToOnes);
    CHECK((last - 2)->state.parts == std::vector<int>{3, 3, 1, 1, 1});
    CHECK((last - 3)->rule == Rule::Insert);
    CHECK((last - 3)->state.parts == std::vector<int>{3, 3, 3});

    BijectionTrace ones = trace_chain(Partition::all_ones(9));
    CHECK(ones.steps.back().state.parts == std::vector<int>{9});

    BijectionTrace row81 = trace_chain(Partition({8, 1}));
    REQUIRE(row81.steps.size() >= 3);
    CHECK((row81.steps.end() - 3)->state.parts == std::vector<int>{7, 2});
    CHECK((row81.steps.end() - 2)->state.parts == std::vector<int>{7, 1, 1});
    CHECK((row81.steps.end() - 1)->state.parts == std::vector<int>{6, 2, 1});

    // every state in a trace carries the full weight n
    for (const auto& step : chain.steps) CHECK(state_total(step.state) == 9);
}

TEST_CASE("exhaustive bijectivity with beta bookkeeping at small n") {
    for (int n = 2; n <= 16; ++n) {
        std::vector<std::vector<int>> images, fstar;
        EvenMexInverse inverse(n);
        for (const Partition& lambda : enumerate_partitions(n)) {
            if (member(lambda, {ClassTag::Fstar, std::nullopt})) fstar.push_back(lambda.parts());
            if (mex(lambda) % 2 == 0) {
                auto [phi, trace] = even_mex_to_fixed_point(lambda);
                images.push_back(phi.parts());
                auto param = class_param(std::span<const int>(phi.parts()), ClassTag::Fstar);
                REQUIRE(param.has_value());
                CHECK(*param == beta(lambda) + 1);
                CHECK(inverse(phi) == lambda);
            }
            if (crank(lambda) < 0) {
                Partition phi = negcrank_to_fixed(lambda);
                CHECK(fstar_to_negcrank(phi) == lambda);
                Partition rho = neg_to_pos_crank(lambda);
                CHECK(beta(rho) == beta(lambda) + 1);
                CHECK(crank(rho) > 0);
                CHECK(pos_to_neg_crank(rho) == lambda);
            }
        }
        std::sort(images.begin(), images.end());
        std::sort(fstar.begin(), fstar.end());
        CHECK(images == fstar);
    }
}
