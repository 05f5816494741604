#include "lowop/weights.hpp"

#include <stdexcept>
#include <string>

namespace lowop {

long long mod_canonical(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ResidueClass residue(long long i, long long j, long long p) {
    if (p < 2) throw std::domain_error("residue: modulus must be >= 2");
    return ResidueClass{mod_canonical(i - j, p), p};
}

bool interlaces(const Weight& lambda, const Weight& mu) {
    if (lambda.size() != mu.size() + 1)
        throw std::invalid_argument("interlaces: mu must be one entry shorter than lambda");
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
    return true;
}

bool is_dominant(const Weight& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

BranchingPair BranchingPair::make(long long p, Weight lambda, Weight mu) {
    if (lambda.size() < 2) throw std::invalid_argument("BranchingPair: need n >= 2");
    if (!is_prime(p)) throw std::invalid_argument("BranchingPair: p must be prime");
    if (!is_dominant(lambda)) throw std::invalid_argument("BranchingPair: lambda not non-increasing");
    if (!is_dominant(mu)) throw std::invalid_argument("BranchingPair: mu not non-increasing");
    if (!interlaces(lambda, mu))
        throw std::invalid_argument("BranchingPair: mu does not interlace lambda");
    BranchingPair pair;
    pair.n = static_cast<int>(lambda.size());
    pair.p = p;
    pair.lambda = std::move(lambda);
    pair.mu = std::move(mu);
    return pair;
}

std::vector<long long> a_values(const BranchingPair& pair) {
    std::vector<long long> a(static_cast<std::size_t>(pair.n - 1));
    long long acc = 0;
    for (int i = 1; i < pair.n; ++i) {
        acc += pair.lambda_(i) - pair.mu_(i);
        a[static_cast<std::size_t>(i - 1)] = acc;
    }
    return a;
}

bool valid_k_for_b(int n, int t, int k) {
    int lo = 1 + (t + 1 == n ? n - 1 : 0);
    return lo <= k && k <= n;
}

bool valid_k_for_eval(int n, int j, int k) {
    int lo = 1 + (j == n ? n - 1 : 0);
    return lo <= k && k <= n;
}

ResidueClass b_residue(const BranchingPair& pair, int i, int t, int k) {
    if (!(1 <= i && i <= t && t < pair.n))
        throw std::domain_error("b_residue: need 1 <= i <= t < n");
    if (!valid_k_for_b(pair.n, t, k))
        throw std::domain_error("b_residue: k=" + std::to_string(k) +
                                " is outside the admissible range for t=" + std::to_string(t));
    long long tail = (k <= t) ? pair.mu_(t + 1) : pair.lambda_(t + 1);
    return ResidueClass{mod_canonical(t - i + pair.mu_(i) - tail, pair.p), pair.p};
}

ResidueClass b_residue(const BranchingPair& pair, int i, int t) {
    return b_residue(pair, i, t, pair.n);
}

ResidueClass b_mu_residue(const BranchingPair& pair, int i, int a) {
    if (!(1 <= i && i <= a && a + 1 <= pair.n - 1))
        throw std::domain_error("b_mu_residue: need 1 <= i <= a <= n-2");
    return ResidueClass{mod_canonical(a - i + pair.mu_(i) - pair.mu_(a + 1), pair.p), pair.p};
}

ResidueClass c_residue(const BranchingPair& pair, int i, int a) {
    if (!(1 <= i && i < a && a < pair.n))
        throw std::domain_error("c_residue: need 1 <= i < a < n");
    return ResidueClass{mod_canonical(a - i + pair.mu_(i) - pair.mu_(a), pair.p), pair.p};
}

std::vector<int> b_set(const BranchingPair& pair, int i, int j, int k) {
    if (!(1 <= i && i <= j && j <= pair.n)) throw std::domain_error("b_set: need 1 <= i <= j <= n");
    if (j == pair.n && k != pair.n)
        throw std::domain_error("b_set: j = n requires k = n");
    std::vector<int> out;
    for (int a = i; a < j; ++a)
        if (b_residue(pair, i, a, k).is_zero()) out.push_back(a);
    return out;
}

std::vector<int> b_set(const BranchingPair& pair, int i, int j) {
    return b_set(pair, i, j, pair.n);
}

std::vector<int> b_mu_set(const BranchingPair& pair, int i, int j) {
    if (!(1 <= i && i <= j && j <= pair.n - 1))
        throw std::domain_error("b_mu_set: defined only for j <= n-1");
    std::vector<int> out;
    for (int a = i; a < j; ++a)
        if (b_mu_residue(pair, i, a).is_zero()) out.push_back(a);
    return out;
}

std::vector<int> c_set(const BranchingPair& pair, int i, int j) {
    if (!(1 <= i && i <= j && j <= pair.n)) throw std::domain_error("c_set: need 1 <= i <= j <= n");
    std::vector<int> out;
    for (int a = i + 1; a < j; ++a)
        if (c_residue(pair, i, a).is_zero()) out.push_back(a);
    return out;
}

std::vector<int> closed_open(int i, int j) {
    std::vector<int> out;
    for (int a = i; a < j; ++a) out.push_back(a);
    return out;
}

std::vector<int> open_open(int i, int j) {
    std::vector<int> out;
    for (int a = i + 1; a < j; ++a) out.push_back(a);
    return out;
}

}  // namespace lowop
