#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "lowop/seq_graph.hpp"

using namespace lowop;

namespace {

std::set<std::string> encoded(const std::vector<SeqX>& xs) {
    std::set<std::string> out;
    for (const SeqX& x : xs) out.insert(encode_seq(x));
    return out;
}

long long measure(const SeqX& x) {
    long long s = 0;
    for (const Quad& q : x) s += q.k - q.i;
    return s;
}

}  // namespace

TEST_CASE("sequence validation") {
    CHECK(validate_seq({{1, 3, 3, {2}}}, 3));
    CHECK_FALSE(validate_seq({{1, 2, 3, {}}}, 3));  // j = n needs k = n
    CHECK(validate_seq({{1, 2, 2, {}}, {3, 4, 4, {}}}, 4));
    CHECK_FALSE(validate_seq({{1, 2, 2, {}}, {2, 3, 3, {}}}, 3));  // overlap
    CHECK_FALSE(validate_seq({}, 3));
    CHECK(validate_seq({{2, 2, 2, {}}}, 3));  // trivial factor
}

TEST_CASE("transitions fire exactly where the rules allow") {
    // blocked: k = n kills rule 1, 2 in A kills rule 2, split range empty
    CHECK(transitions({{1, 3, 3, {2}}}, 3).empty());

    auto out = transitions({{1, 3, 3, {2}}}, 4);
    REQUIRE(out.size() == 1);
    CHECK(out[0].label == 2);
    CHECK(out[0].rule == 1);
    CHECK(out[0].target == SeqX{{1, 2, 3, {2}}});

    CHECK(transitions({{1, 1, 2, {}}}, 3).empty());

    // the label l = k-1 always lowers k; splits need l < k-1
    auto big = transitions({{1, 3, 4, {2}}}, 5);
    REQUIRE(big.size() == 1);
    CHECK(big[0].rule == 1);
    CHECK(big[0].target == SeqX{{1, 2, 4, {2}}});

    // genuine split: l strictly between i and k-1
    auto split = transitions({{1, 4, 4, {2}}}, 5);
    // rule 2 blocked (2 in A); rule 3 at l = 2; rule 1 at l = 3
    REQUIRE(split.size() == 2);
    CHECK(split[0].rule == 3);
    CHECK(split[0].label == 2);
    CHECK(split[0].target == SeqX{{1, 2, 2, {}}, {3, 4, 4, {}}});
    CHECK(split[1].rule == 1);
    CHECK(split[1].label == 3);
}

TEST_CASE("closures") {
    CHECK(encoded(closure({{1, 2, 2, {}}}, 3)) ==
          std::set<std::string>{"(1,2,2,{})", "(1,1,2,{})"});
    CHECK(encoded(closure({{1, 1, 2, {}}}, 3)) == std::set<std::string>{"(1,1,2,{})"});
    // adjacent intervals only ever lower k
    CHECK(encoded(closure({{2, 3, 3, {}}}, 4)) ==
          std::set<std::string>{"(2,3,3,{})", "(2,2,3,{})"});
    // wider intervals also shift i upward
    CHECK(encoded(closure({{1, 3, 3, {}}}, 4)) ==
          std::set<std::string>{"(1,3,3,{})", "(1,2,3,{})", "(2,3,3,{})", "(1,1,3,{})",
                                "(2,2,3,{})"});
}

TEST_CASE("every transition lowers the k-i measure by one") {
    for (int n : {3, 4}) {
        for (const SeqX& x : enumerate_sequences(n)) {
            for (const Transition& t : transitions(x, n)) {
                CHECK(validate_seq(t.target, n));
                CHECK(measure(t.target) == measure(x) - 1);
            }
        }
    }
}

TEST_CASE("closure of a concatenation is the concatenation of closures") {
    for (const SeqX& x : enumerate_sequences(4)) {
        if (x.size() != 2) continue;
        std::set<std::string> expect;
        for (const SeqX& u : closure({x[0]}, 4))
            for (const SeqX& v : closure({x[1]}, 4)) {
                SeqX uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                expect.insert(encode_seq(uv));
            }
        CHECK(encoded(closure(x, 4)) == expect);
    }
}

TEST_CASE("sequence scalars") {
    BranchingPair pair = BranchingPair::make(2, {2, 1, 0}, {1, 1});
    CHECK(k_of_seq(pair, {{1, 3, 3, {}}}).value == 0);
    CHECK(k_of_seq(pair, {{1, 3, 3, {2}}}).value == 0);
    CHECK(k_of_seq(pair, {{2, 3, 3, {}}}).value == 1);
    // a trivial factor leaves the product alone
    CHECK(k_of_seq(pair, {{1, 1, 1, {}}}).value == 1);
}

TEST_CASE("vanishing through the closure") {
    BranchingPair pair = BranchingPair::make(2, {2, 1, 0}, {1, 1});
    CHECK(phi_vanishes(pair, {{1, 3, 3, {2}}}));
    CHECK_FALSE(phi_vanishes(pair, {{1, 3, 3, {}}}));
}

TEST_CASE("concatenation vanishing splits") {
    std::vector<BranchingPair> pairs{
        BranchingPair::make(2, {2, 1, 1, 0}, {2, 1, 1}),
        BranchingPair::make(3, {3, 2, 1, 0}, {2, 2, 1}),
    };
    for (const BranchingPair& pair : pairs) {
        for (const SeqX& x : enumerate_sequences(4)) {
            if (x.size() != 2) continue;
            CHECK(phi_vanishes(pair, x) ==
                  (phi_vanishes(pair, {x[0]}) || phi_vanishes(pair, {x[1]})));
        }
    }
}

TEST_CASE("weights of the produced vectors") {
    BranchingPair pair = BranchingPair::make(2, {2, 1, 0}, {1, 1});
    CHECK(phi_weight(pair, {{1, 3, 3, {}}}) == Weight{0, 1});
    CHECK(phi_weight(pair, {{1, 2, 2, {}}}) == Weight{0, 2});
    CHECK(phi_weight(pair, {{1, 1, 2, {}}}) == Weight{1, 1});
}

TEST_CASE("trace emission format") {
    std::ostringstream trace;
    closure_traced({{1, 3, 3, {}}}, 4, trace);
    std::istringstream lines(trace.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        CHECK(std::count(line.begin(), line.end(), '\t') == 3);
    }
    CHECK(count >= 4);
}
