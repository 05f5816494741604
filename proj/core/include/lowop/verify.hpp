#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lowop/criteria.hpp"
#include "lowop/records.hpp"
#include "lowop/weights.hpp"

namespace lowop {

// Case grid for the verification sweeps: all lambda with lambda_n = 0,
// lambda_1 <= max_first, |lambda| <= max_total, every interlacing mu,
// every 1 <= i < j <= n and every A subset of (i..j).
struct SweepOptions {
    std::vector<long long> primes{2, 3};
    std::vector<int> ranks{3, 4};
    long long max_first = 3;
    long long max_total = 6;
    int workers = 1;
};

struct Mismatch {
    long long p = 0;
    Weight lambda;
    Weight mu;
    int i = 0;
    int j = 0;
    std::vector<int> A;
    std::string check;
    std::string expected;
    std::string got;
};

std::string mismatch_json(const Mismatch& m);

struct SweepReport {
    long long cases = 0;
    std::map<std::string, long long> counts;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;

    bool ok() const { return mismatches.empty(); }
    void absorb(const SweepReport& other);
};

std::vector<Weight> enumerate_lambdas(int n, long long max_first, long long max_total);
std::vector<Weight> enumerate_interlacing_mus(const Weight& lambda);

// Pluggable classifier, so tests can inject a faulty one and watch the
// harness catch it.
using Classifier =
    std::function<Classification(const BranchingPair&, int, int, const std::vector<int>&)>;

// Three-way agreement over the whole grid: classifier (criteria by
// default) vs the module oracle, and the vanishing criterion vs the
// closure oracle.
SweepReport run_agreement_sweep(const SweepOptions& opts, const Classifier& classifier = {});

// E_{j-1} S_{i,j}(A) vanishing: decidable criterion vs closure oracle vs
// direct module computation, over the grid cases with i < j-1 < n-1, j-1 in A.
SweepReport run_raised_vanishing_sweep(const SweepOptions& opts);

// find_good_set agrees with exhaustive classification, and every witness
// re-classifies as high weight; the k-indexed existence route agrees too.
SweepReport run_existence_sweep(const SweepOptions& opts);

// Definition vs recursion for the K polynomials and exactness of the
// rational-expression division, over spans up to max_span.
SweepReport run_polynomial_suite(int max_span);

// Operator identities on the model over the identity grid (all lambda with
// |lambda| <= max_total for each rank and prime; every interlacing mu
// where mu enters).
SweepReport run_identity_suite(const SweepOptions& opts);

// Branching dimensions, the zero-set splitting identity, the pi/pi-bar
// equivalence for v <= N, and shift invariance.
SweepReport run_structural_suite(const SweepOptions& opts);

// The locked worked examples, checked against both the criteria and the
// module oracle.
SweepReport run_locked_examples();

// Records for the CLI paths. with_checks adds the two oracle cross-check
// flags per record (the module oracle runs on the shifted-to-polynomial pair).
ResultRecord make_case_record(const BranchingPair& pair, int i, int j, const std::vector<int>& A,
                              bool with_checks);
std::vector<ResultRecord> enumerate_case_records(const BranchingPair& pair, int i, int j,
                                                 bool with_checks);
std::vector<ResultRecord> run_grid_records(const SweepOptions& opts, bool with_checks);

}  // namespace lowop
