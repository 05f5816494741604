#pragma once

#include <vector>

namespace lowop {

// Integer weights for GL(n): length-n (or n-1) non-increasing sequences.
// Entries may be negative; only the module oracle needs polynomial weights.
using Weight = std::vector<long long>;

// Canonical representative in [0..p).
long long mod_canonical(long long a, long long p);

bool is_prime(long long p);

// An element of Z/pZ, stored canonically.
struct ResidueClass {
    long long value = 0;  // in [0..p)
    long long p = 2;

    bool is_zero() const { return value == 0; }
    bool operator==(const ResidueClass&) const = default;
};

// res_p(i, j) = (i - j) + pZ.
ResidueClass residue(long long i, long long j, long long p);

// lambda_i >= mu_i >= lambda_{i+1} for 1 <= i < n (lambda has length n,
// mu has length n-1). Throws std::invalid_argument on a length mismatch.
bool interlaces(const Weight& lambda, const Weight& mu);

bool is_dominant(const Weight& w);

// The global context of every computation: n, p and an interlacing weight
// pair mu <- lambda. Construct through make(), which validates everything.
struct BranchingPair {
    int n = 2;
    long long p = 2;
    Weight lambda;  // length n
    Weight mu;      // length n-1

    static BranchingPair make(long long p, Weight lambda, Weight mu);

    long long lambda_(int i) const { return lambda[static_cast<std::size_t>(i - 1)]; }
    long long mu_(int i) const { return mu[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const BranchingPair&) const = default;
};

// a_i = sum_{s<=i} (lambda_s - mu_s), i = 1..n-1. The exponents of the
// E-word normalizing f_{mu,lambda} to f_lambda; all non-negative.
std::vector<long long> a_values(const BranchingPair& pair);

// Admissible k range for the substituted residue of y_{t+1} - x_i:
// k in [1 + [t+1==n](n-1) .. n].
bool valid_k_for_b(int n, int t, int k);
// Admissible k range for evaluating K_{i,j}: k in [1 + [j==n](n-1) .. n].
bool valid_k_for_eval(int n, int j, int k);

// B^{mu,lambda,k}(i,t): (t-i+mu_i-mu_{t+1}) mod p for k <= t,
// (t-i+mu_i-lambda_{t+1}) mod p for k > t. Requires 1 <= i <= t < n and
// an admissible k; throws std::domain_error otherwise.
ResidueClass b_residue(const BranchingPair& pair, int i, int t, int k);
// The k = n abbreviation B^{mu,lambda}(i,t).
ResidueClass b_residue(const BranchingPair& pair, int i, int t);

// B^mu(i,a) = (a-i+mu_i-mu_{a+1}) mod p. Requires 1 <= i <= a <= n-2.
ResidueClass b_mu_residue(const BranchingPair& pair, int i, int a);

// C^mu(i,a) = (a-i+mu_i-mu_a) mod p. Requires 1 <= i < a < n.
ResidueClass c_residue(const BranchingPair& pair, int i, int a);

// Zero sets, returned sorted ascending.
// {a in [i..j) : B^{mu,lambda,k}(i,a) = 0}; every a must admit k, so j = n
// forces k = n.
std::vector<int> b_set(const BranchingPair& pair, int i, int j, int k);
// k = n abbreviation.
std::vector<int> b_set(const BranchingPair& pair, int i, int j);
// {a in [i..j) : B^mu(i,a) = 0}; defined only for j <= n-1.
std::vector<int> b_mu_set(const BranchingPair& pair, int i, int j);
// {a in (i..j) : C^mu(i,a) = 0}; requires j <= n.
std::vector<int> c_set(const BranchingPair& pair, int i, int j);

// [i..j) etc. as explicit sorted vectors.
std::vector<int> closed_open(int i, int j);  // {a : i <= a < j}
std::vector<int> open_open(int i, int j);    // {a : i < a < j}

}  // namespace lowop
