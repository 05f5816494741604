#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowop/criteria.hpp"
#include "lowop/weights.hpp"

namespace lowop {

// Cross-check flags, present only in verify modes: agreement with the
// closure-graph oracle and with the explicit module oracle.
struct CrossChecks {
    std::optional<bool> closure_oracle;
    std::optional<bool> nabla_oracle;

    bool operator==(const CrossChecks&) const = default;
};

// One classified case, the unit of every CLI output stream.
struct ResultRecord {
    long long p = 2;
    Weight lambda;
    Weight mu;
    int i = 1;
    int j = 2;
    std::vector<int> A;
    Classification cls = Classification::Zero;
    std::optional<Weight> nu;
    std::optional<InjectionWitness> witness_d;
    std::optional<InjectionWitness> witness_eps;
    CrossChecks checks;

    bool operator==(const ResultRecord&) const = default;
};

// Single-line JSON form; parse(emit(r)) == r.
std::string emit_json(const ResultRecord& r);
ResultRecord parse_json(const std::string& line);

// Fixed CSV columns: p, lambda, mu, i, j, A, class, nu, witness_d,
// witness_eps, checks. List cells are ';'-separated, witness pairs are
// "s>t", checks are "name=ok|FAIL" entries.
std::string csv_header();
std::string emit_csv(const ResultRecord& r);

}  // namespace lowop
