#include <doctest.h>

#include "lowop/verify.hpp"

using namespace lowop;

TEST_CASE("lambda and mu grids") {
    auto lambdas = enumerate_lambdas(3, 3, 6);
    CHECK(lambdas.size() == 10);
    for (const Weight& l : lambdas) {
        CHECK(l.size() == 3);
        CHECK(l.back() == 0);
        CHECK(is_dominant(l));
    }
    auto mus = enumerate_interlacing_mus({2, 1, 0});
    CHECK(mus.size() == 4);
    for (const Weight& mu : mus) CHECK(interlaces({2, 1, 0}, mu));
}

TEST_CASE("locked examples hold") {
    SweepReport rep = run_locked_examples();
    for (const Mismatch& m : rep.mismatches) MESSAGE(mismatch_json(m));
    CHECK(rep.ok());
    CHECK(rep.cases == 4);
}

TEST_CASE("polynomial suite at small span") {
    SweepReport rep = run_polynomial_suite(3);
    CHECK(rep.ok());
    CHECK(rep.cases > 0);
}

TEST_CASE("a tiny agreement sweep passes and catches injected faults") {
    SweepOptions opts;
    opts.primes = {2};
    opts.ranks = {3};
    opts.max_first = 2;
    opts.max_total = 3;

    SweepReport clean = run_agreement_sweep(opts);
    for (const Mismatch& m : clean.mismatches) MESSAGE(mismatch_json(m));
    CHECK(clean.ok());
    CHECK(clean.cases > 0);

    // flip one classification and the sweep must report it
    Classifier faulty = [](const BranchingPair& pair, int i, int j,
                           const std::vector<int>& A) {
        Classification real = classify_lowering(pair, i, j, A).cls;
        if (pair.lambda == Weight{2, 1, 0} && pair.mu == Weight{1, 1} && i == 1 && j == 3 &&
            A == std::vector<int>{2})
            return real == Classification::Zero ? Classification::NonzeroNotHighWeight
                                                : Classification::Zero;
        return real;
    };
    SweepReport faulted = run_agreement_sweep(opts, faulty);
    CHECK_FALSE(faulted.ok());
    CHECK(faulted.mismatches.size() == 1);
    CHECK(faulted.mismatches[0].check == "criteria vs module oracle");
}

TEST_CASE("grid records carry passing cross-checks") {
    SweepOptions opts;
    opts.primes = {2};
    opts.ranks = {3};
    opts.max_first = 1;
    opts.max_total = 2;
    auto records = run_grid_records(opts, true);
    CHECK(!records.empty());
    for (const ResultRecord& r : records) {
        REQUIRE(r.checks.closure_oracle);
        REQUIRE(r.checks.nabla_oracle);
        CHECK(*r.checks.closure_oracle);
        CHECK(*r.checks.nabla_oracle);
        CHECK(parse_json(emit_json(r)) == r);
    }
}

TEST_CASE("record streams are deterministic across worker counts") {
    SweepOptions one;
    one.primes = {2};
    one.ranks = {3};
    one.max_first = 2;
    one.max_total = 4;
    one.workers = 1;
    SweepOptions four = one;
    four.workers = 4;
    CHECK(run_grid_records(one, false) == run_grid_records(four, false));
}

TEST_CASE("single case records") {
    BranchingPair pair = BranchingPair::make(3, {4, 2, 0}, {4, 1});
    ResultRecord r = make_case_record(pair, 1, 2, {}, true);
    CHECK(r.cls == Classification::NonzeroHighWeight);
    REQUIRE(r.nu);
    CHECK(*r.nu == Weight{3, 2});
    CHECK(r.checks.closure_oracle == true);
    CHECK(r.checks.nabla_oracle == true);

    auto table = enumerate_case_records(pair, 1, 3, false);
    CHECK(table.size() == 2);
    CHECK_FALSE(table[0].checks.closure_oracle.has_value());
}
