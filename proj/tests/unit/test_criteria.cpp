#include <doctest.h>

#include "lowop/criteria.hpp"
#include "lowop/errors.hpp"

using namespace lowop;

namespace {
BranchingPair pair_213_11() { return BranchingPair::make(2, {2, 1, 0}, {1, 1}); }
BranchingPair pair_3210_320() { return BranchingPair::make(2, {3, 2, 1, 0}, {3, 2, 0}); }
}  // namespace

TEST_CASE("connected components") {
    CHECK(components({}).empty());
    CHECK(components({2}) == std::vector<std::pair<int, int>>{{2, 2}});
    CHECK(components({2, 3, 5}) == std::vector<std::pair<int, int>>{{2, 3}, {5, 5}});
}

TEST_CASE("the pi condition") {
    BranchingPair pair = pair_213_11();
    CHECK_FALSE(condition_pi(pair, 1, 3, {2}, 1));  // {i} -> [1..1) impossible
    CHECK_FALSE(condition_pi(pair, 1, 3, {2}, 2));  // theta(2)=2 forced, residue 1
    CHECK(condition_pi(pair, 1, 3, {}, 1));
    CHECK_THROWS_AS(condition_pi(pair, 1, 3, {2}, 3), std::domain_error);
    CHECK_THROWS_AS(condition_pi(pair, 1, 3, {2}, 0), std::domain_error);
}

TEST_CASE("the restricted pi condition") {
    BranchingPair pair = BranchingPair::make(2, {3, 2, 1, 0, 0}, {3, 1, 1, 0});
    // only k = 1 admits a vanishing residue, k = 2 does not
    CHECK_FALSE(condition_pi_bar(pair, 1, 3, {}, 1));
    CHECK_THROWS_AS(condition_pi_bar(pair, 1, 2, {}, 1), std::domain_error);
}

TEST_CASE("vanishing of the lowering image") {
    BranchingPair pair = pair_213_11();
    CHECK(lowering_vanishes(pair, 1, 3, {2}));
    CHECK_FALSE(lowering_vanishes(pair, 1, 3, {}));

    BranchingPair gap = BranchingPair::make(5, {4, 1, 0}, {2, 1});
    CHECK_FALSE(lowering_vanishes(gap, 1, 3, {}));
    CHECK_FALSE(lowering_vanishes(gap, 1, 3, {2}));
}

TEST_CASE("vanishing after one raise") {
    BranchingPair pair = pair_3210_320();
    CHECK(raised_lowering_vanishes(pair, 1, 3, {2}));
    CHECK_THROWS_AS(raised_lowering_vanishes(pair, 1, 3, {}), std::domain_error);
    CHECK_THROWS_AS(raised_lowering_vanishes(pair_213_11(), 1, 3, {2}), std::domain_error);
}

TEST_CASE("classification when the node is removed") {
    BranchingPair pair = pair_213_11();
    CHECK(classify_remove_node(pair, 1, {}).cls == Classification::NonzeroNotHighWeight);
    CHECK(classify_remove_node(pair, 1, {2}).cls == Classification::Zero);

    BranchingPair gap = BranchingPair::make(5, {4, 1, 0}, {2, 1});
    ClassifyResult full = classify_remove_node(gap, 1, {2});
    CHECK(full.cls == Classification::NonzeroHighWeight);
    REQUIRE(full.nu);
    CHECK(*full.nu == Weight{1, 1});
    REQUIRE(full.witness_d);
    CHECK(full.witness_d->pairs.empty());
}

TEST_CASE("classification when the node moves") {
    BranchingPair pair = pair_3210_320();
    ClassifyResult res = classify_move_node(pair, 1, 3, {2});
    CHECK(res.cls == Classification::NonzeroHighWeight);
    REQUIRE(res.nu);
    CHECK(*res.nu == Weight{2, 2, 1});
    // without j-1 the image can never be high weight
    CHECK(classify_move_node(pair, 1, 3, {}).cls == Classification::NonzeroNotHighWeight);
    CHECK_THROWS_AS(classify_move_node(pair, 1, 4, {}), std::domain_error);
}

TEST_CASE("classification of a single generator") {
    BranchingPair pair = BranchingPair::make(3, {4, 2, 0}, {4, 1});
    ClassifyResult res = classify_adjacent_move(pair, 1);
    CHECK(res.cls == Classification::NonzeroHighWeight);
    CHECK(*res.nu == Weight{3, 2});

    CHECK(classify_adjacent_move(pair_213_11(), 1).cls == Classification::Zero);
    CHECK(classify_adjacent_move(BranchingPair::make(3, {2, 1, 0}, {2, 1}), 1).cls ==
          Classification::NonzeroNotHighWeight);
}

TEST_CASE("the dispatcher routes by parameter range") {
    BranchingPair pair = pair_3210_320();
    CHECK(classify_lowering(pair, 1, 4, {}).cls ==
          classify_remove_node(pair, 1, {}).cls);
    CHECK(classify_lowering(pair, 1, 3, {2}).cls ==
          classify_move_node(pair, 1, 3, {2}).cls);
    CHECK(classify_lowering(pair, 1, 2, {}).cls == classify_adjacent_move(pair, 1).cls);
    CHECK_THROWS_AS(classify_lowering(pair, 2, 2, {}), std::domain_error);
}

TEST_CASE("existence of a good set, removing") {
    BranchingPair gap = BranchingPair::make(5, {4, 1, 0}, {2, 1});
    auto found = find_good_set_remove(gap, 1);
    REQUIRE(found);
    CHECK(found->A == std::vector<int>{2});

    CHECK_FALSE(find_good_set_remove(pair_213_11(), 1));
}

TEST_CASE("existence of a good set, moving") {
    auto found = find_good_set_move(pair_3210_320(), 1, 3);
    REQUIRE(found);
    CHECK(found->A == std::vector<int>{2});

    auto adjacent = find_good_set_move(BranchingPair::make(3, {4, 2, 0}, {4, 1}), 1, 2);
    REQUIRE(adjacent);
    CHECK(adjacent->A.empty());

    // pigeonhole: the zero set outnumbers the decreasing codomain
    BranchingPair crowded = BranchingPair::make(3, {3, 3, 2, 0}, {3, 2, 1});
    CHECK(b_mu_residue(crowded, 1, 2).is_zero());
    CHECK_FALSE(b_residue(crowded, 1, 2).is_zero());
    CHECK(b_set(crowded, 1, 2) == std::vector<int>{1});
    CHECK(c_set(crowded, 1, 2).empty());
    CHECK_FALSE(find_good_set_move(crowded, 1, 3));
}

TEST_CASE("enumeration of all subsets") {
    BranchingPair pair = pair_213_11();
    auto table = classify_all_sets(pair, 1, 3);
    REQUIRE(table.size() == 2);
    CHECK(table[0].first.empty());
    CHECK(table[0].second.cls == Classification::NonzeroNotHighWeight);
    CHECK(table[1].first == std::vector<int>{2});
    CHECK(table[1].second.cls == Classification::Zero);

    CHECK(classify_all_sets(pair, 1, 2).size() == 1);
    CHECK(classify_all_sets(pair_3210_320(), 1, 4).size() == 4);
    BranchingPair tall = BranchingPair::make(2, {1, 1, 1, 1, 0}, {1, 1, 1, 1});
    CHECK(classify_all_sets(tall, 1, 5).size() == 8);
}

TEST_CASE("witnesses re-validate") {
    BranchingPair pair = pair_3210_320();
    ClassifyResult res = classify_move_node(pair, 1, 3, {2});
    REQUIRE(res.witness_d);
    auto allowed = [&](int s, int t) { return b_residue(pair, s, t).is_zero(); };
    CHECK(validate_witness(*res.witness_d, {}, allowed, open_open(1, 3)));
}

TEST_CASE("classification is shift invariant") {
    BranchingPair pair = pair_3210_320();
    BranchingPair shifted = BranchingPair::make(2, {4, 3, 2, 1}, {4, 3, 1});
    CHECK(classify_lowering(pair, 1, 3, {2}).cls == classify_lowering(shifted, 1, 3, {2}).cls);
    CHECK(*classify_lowering(shifted, 1, 3, {2}).nu == Weight{3, 3, 2});
}
