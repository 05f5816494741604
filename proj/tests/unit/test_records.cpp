#include <doctest.h>

#include "lowop/records.hpp"

using namespace lowop;

namespace {

ResultRecord full_record() {
    ResultRecord r;
    r.p = 2;
    r.lambda = {3, 2, 1, 0};
    r.mu = {3, 2, 0};
    r.i = 1;
    r.j = 3;
    r.A = {2};
    r.cls = Classification::NonzeroHighWeight;
    r.nu = Weight{2, 2, 1};
    r.witness_d = InjectionWitness{{{2, 2}}, Direction::WeaklyIncreasing};
    r.witness_eps = InjectionWitness{{}, Direction::WeaklyDecreasing};
    r.checks.closure_oracle = true;
    r.checks.nabla_oracle = true;
    return r;
}

}  // namespace

TEST_CASE("json records round-trip") {
    ResultRecord r = full_record();
    CHECK(parse_json(emit_json(r)) == r);

    ResultRecord minimal;
    minimal.p = 3;
    minimal.lambda = {4, 2, 0};
    minimal.mu = {4, 1};
    minimal.i = 1;
    minimal.j = 2;
    minimal.cls = Classification::Zero;
    CHECK(parse_json(emit_json(minimal)) == minimal);
}

TEST_CASE("classification names round-trip") {
    for (Classification c : {Classification::Zero, Classification::NonzeroNotHighWeight,
                             Classification::NonzeroHighWeight})
        CHECK(classification_from_string(to_string(c)) == c);
    CHECK_FALSE(classification_from_string("bogus"));
}

TEST_CASE("csv layout is stable") {
    CHECK(csv_header() == "p,lambda,mu,i,j,A,class,nu,witness_d,witness_eps,checks");
    CHECK(emit_csv(full_record()) ==
          "2,3;2;1;0,3;2;0,1,3,2,NonzeroHighWeight,2;2;1,2>2,empty,closure=ok;nabla=ok");
    ResultRecord minimal;
    minimal.p = 3;
    minimal.lambda = {4, 2, 0};
    minimal.mu = {4, 1};
    minimal.i = 1;
    minimal.j = 2;
    minimal.cls = Classification::Zero;
    CHECK(emit_csv(minimal) == "3,4;2;0,4;1,1,2,,Zero,,,,");
}
