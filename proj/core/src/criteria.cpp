#include "lowop/criteria.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lowop/errors.hpp"

namespace lowop {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Zero: return "Zero";
        case Classification::NonzeroNotHighWeight: return "NonzeroNotHighWeight";
        case Classification::NonzeroHighWeight: return "NonzeroHighWeight";
    }
    return "?";
}

std::optional<Classification> classification_from_string(const std::string& s) {
    if (s == "Zero") return Classification::Zero;
    if (s == "NonzeroNotHighWeight") return Classification::NonzeroNotHighWeight;
    if (s == "NonzeroHighWeight") return Classification::NonzeroHighWeight;
    return std::nullopt;
}

std::vector<std::pair<int, int>> components(const std::vector<int>& M) {
    if (!std::is_sorted(M.begin(), M.end()))
        throw std::invalid_argument("components: set must be sorted");
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 0; t < M.size(); ++t) {
        if (!out.empty() && M[t] == out.back().second + 1) {
            out.back().second = M[t];
        } else {
            out.emplace_back(M[t], M[t]);
        }
    }
    return out;
}

namespace {

void check_subset(const std::vector<int>& M, int i, int j, const char* who) {
    if (!std::is_sorted(M.begin(), M.end()))
        throw std::invalid_argument(std::string(who) + ": set must be sorted");
    for (int a : M)
        if (!(i < a && a < j)) throw std::invalid_argument(std::string(who) + ": set not inside (i..j)");
}

std::vector<int> complement_in_open(const std::vector<int>& A, int i, int j) {
    std::vector<int> out;
    for (int a = i + 1; a < j; ++a)
        if (!std::binary_search(A.begin(), A.end(), a)) out.push_back(a);
    return out;
}

// shared body of the pi conditions; k ranges over [k_lo..k_hi]
bool pi_body(const BranchingPair& pair, int i, const std::vector<int>& M, int v, int cap,
             int k_lo, int k_hi) {
    auto comps = components(M);
    const int N = static_cast<int>(comps.size());
    if (!(1 <= v && v <= N + 1)) throw std::domain_error("pi: v out of range");
    const int b_v = (v <= N) ? comps[static_cast<std::size_t>(v - 1)].first : cap;

    std::vector<int> domain{i};
    for (int m = 0; m < v - 1; ++m)
        for (int a = comps[static_cast<std::size_t>(m)].first;
             a <= comps[static_cast<std::size_t>(m)].second; ++a)
            domain.push_back(a);
    const std::vector<int> codomain = closed_open(i, b_v - 1);

    for (int k = k_lo; k <= k_hi; ++k) {
        auto allowed = [&](int x, int t) { return b_residue(pair, x, t, k).is_zero(); };
        if (!find_injection(domain, allowed, codomain, Direction::WeaklyIncreasing))
            return false;
    }
    return true;
}

}  // namespace

bool condition_pi(const BranchingPair& pair, int i, int j, const std::vector<int>& M, int v) {
    if (!(1 <= i && i < j && j <= pair.n))
        throw std::domain_error("condition_pi: need 1 <= i < j <= n");
    check_subset(M, i, j, "condition_pi");
    auto comps = components(M);
    const int N = static_cast<int>(comps.size());
    if (!(1 <= v && v <= N + 1)) throw std::domain_error("condition_pi: v out of range");
    const int b_v = (v <= N) ? comps[static_cast<std::size_t>(v - 1)].first : j + 1;
    const int k_lo = (b_v - 1 == pair.n) ? pair.n : 1;
    return pi_body(pair, i, M, v, j + 1, k_lo, pair.n);
}

bool condition_pi_bar(const BranchingPair& pair, int i, int j, const std::vector<int>& M, int v) {
    if (!(1 <= i && i < j - 1 && j - 1 < pair.n - 1))
        throw std::domain_error("condition_pi_bar: need 1 <= i < j-1 < n-1");
    check_subset(M, i, j - 1, "condition_pi_bar");
    return pi_body(pair, i, M, v, j + 1, 1, j - 1);
}

bool lowering_vanishes(const BranchingPair& pair, int i, int j, const std::vector<int>& A) {
    if (!(1 <= i && i < j && j <= pair.n))
        throw std::domain_error("lowering_vanishes: need 1 <= i < j <= n");
    check_subset(A, i, j, "lowering_vanishes");
    const std::vector<int> M = complement_in_open(A, i, j);
    const int N = static_cast<int>(components(M).size());
    for (int v = 1; v <= N + 1; ++v)
        if (condition_pi(pair, i, j, M, v)) return true;
    return false;
}

bool raised_lowering_vanishes(const BranchingPair& pair, int i, int j, const std::vector<int>& A) {
    if (!(1 <= i && i < j - 1 && j - 1 < pair.n - 1))
        throw std::domain_error("raised_lowering_vanishes: need 1 <= i < j-1 < n-1");
    check_subset(A, i, j, "raised_lowering_vanishes");
    if (!std::binary_search(A.begin(), A.end(), j - 1))
        throw std::domain_error("raised_lowering_vanishes: j-1 must be in A");
    const std::vector<int> M = complement_in_open(A, i, j - 1);
    const int N = static_cast<int>(components(M).size());
    for (int v = 1; v <= N + 1; ++v)
        if (condition_pi_bar(pair, i, j, M, v)) return true;
    return false;
}

namespace {

Weight move_weight(const BranchingPair& pair, int i, int j) {
    Weight nu = pair.mu;
    nu[static_cast<std::size_t>(i - 1)] -= 1;
    if (j < pair.n) nu[static_cast<std::size_t>(j - 1)] += 1;
    return nu;
}

ClassifyResult high_weight_result(const BranchingPair& pair, int i, int j,
                                  InjectionWitness witness) {
    ClassifyResult out;
    out.cls = Classification::NonzeroHighWeight;
    Weight nu = move_weight(pair, i, j);
    if (!is_dominant(nu) || !interlaces(pair.lambda, nu))
        throw internal_error("classification: high-weight target nu fails to interlace");
    out.nu = std::move(nu);
    out.witness_d = std::move(witness);
    return out;
}

// the increasing injection d on (i..j)\A with vanishing top residues whose
// image covers the zero set of t -> B(i,t)
std::optional<InjectionWitness> find_d_witness(const BranchingPair& pair, int i, int j,
                                               const std::vector<int>& A) {
    const std::vector<int> sources = complement_in_open(A, i, j);
    const std::vector<int> codomain = open_open(i, j);
    const std::vector<int> required = b_set(pair, i, j);
    auto allowed = [&](int x, int t) { return b_residue(pair, x, t).is_zero(); };
    return find_injection_covering(sources, allowed, codomain, Direction::WeaklyIncreasing,
                                   required);
}

}  // namespace

ClassifyResult classify_remove_node(const BranchingPair& pair, int i, const std::vector<int>& A) {
    const int n = pair.n;
    if (!(1 <= i && i < n)) throw std::domain_error("classify_remove_node: need 1 <= i < n");
    check_subset(A, i, n, "classify_remove_node");
    if (lowering_vanishes(pair, i, n, A)) return ClassifyResult{Classification::Zero, {}, {}};
    if (auto d = find_d_witness(pair, i, n, A)) return high_weight_result(pair, i, n, *d);
    return ClassifyResult{Classification::NonzeroNotHighWeight, {}, {}};
}

ClassifyResult classify_move_node(const BranchingPair& pair, int i, int j,
                                  const std::vector<int>& A) {
    if (!(1 <= i && i < j - 1 && j - 1 < pair.n - 1))
        throw std::domain_error("classify_move_node: need 1 <= i < j-1 < n-1");
    check_subset(A, i, j, "classify_move_node");
    if (lowering_vanishes(pair, i, j, A)) return ClassifyResult{Classification::Zero, {}, {}};

    ClassifyResult residual{Classification::NonzeroNotHighWeight, {}, {}};
    if (!std::binary_search(A.begin(), A.end(), j - 1)) return residual;
    const std::vector<int> theta_sources = complement_in_open(A, i - 1, j);  // [i..j)\A
    const std::vector<int> theta_codomain = closed_open(i, j);
    for (int k = 1; k <= j - 1; ++k) {
        auto allowed = [&](int x, int t) { return b_residue(pair, x, t, k).is_zero(); };
        if (!find_injection(theta_sources, allowed, theta_codomain, Direction::WeaklyIncreasing))
            return residual;
    }
    if (auto d = find_d_witness(pair, i, j, A)) return high_weight_result(pair, i, j, *d);
    return residual;
}

ClassifyResult classify_adjacent_move(const BranchingPair& pair, int i) {
    if (!(1 <= i && i + 1 < pair.n))
        throw std::domain_error("classify_adjacent_move: need 1 <= i, i+1 < n");
    if (lowering_vanishes(pair, i, i + 1, {})) return ClassifyResult{Classification::Zero, {}, {}};
    const bool b_mu_zero = b_mu_residue(pair, i, i).is_zero();
    const bool b_nonzero = !b_residue(pair, i, i).is_zero();
    if (b_mu_zero && b_nonzero)
        return high_weight_result(pair, i, i + 1,
                                  InjectionWitness{{}, Direction::WeaklyIncreasing});
    return ClassifyResult{Classification::NonzeroNotHighWeight, {}, {}};
}

ClassifyResult classify_lowering(const BranchingPair& pair, int i, int j,
                                 const std::vector<int>& A) {
    if (!(1 <= i && i < j && j <= pair.n))
        throw std::domain_error("classify_lowering: need 1 <= i < j <= n");
    check_subset(A, i, j, "classify_lowering");
    if (j == pair.n) return classify_remove_node(pair, i, A);
    if (j == i + 1) return classify_adjacent_move(pair, i);
    return classify_move_node(pair, i, j, A);
}

std::optional<GoodSetWitness> find_good_set_remove(const BranchingPair& pair, int i) {
    const int n = pair.n;
    if (!(1 <= i && i < n)) throw std::domain_error("find_good_set_remove: need 1 <= i < n");
    const std::vector<int> zeros = b_set(pair, i, n);
    const std::vector<int> codomain = c_set(pair, i, n);
    auto any = [](int, int) { return true; };
    auto eps = find_injection(zeros, any, codomain, Direction::WeaklyDecreasing);
    if (!eps) return std::nullopt;
    std::vector<int> A = open_open(i, n);
    for (auto [s, t] : eps->pairs) A.erase(std::find(A.begin(), A.end(), t));
    if (classify_remove_node(pair, i, A).cls != Classification::NonzeroHighWeight)
        throw internal_error("find_good_set_remove: constructed set fails to classify high weight");
    return GoodSetWitness{std::move(A), std::move(*eps)};
}

std::optional<GoodSetWitness> find_good_set_move(const BranchingPair& pair, int i, int j) {
    if (!(1 <= i && i < j && j < pair.n))
        throw std::domain_error("find_good_set_move: need 1 <= i < j < n");
    auto any = [](int, int) { return true; };
    if (j == i + 1) {
        if (!(b_mu_residue(pair, i, i).is_zero() && !b_residue(pair, i, i).is_zero()))
            return std::nullopt;
        if (classify_adjacent_move(pair, i).cls != Classification::NonzeroHighWeight)
            throw internal_error("find_good_set_move: adjacent criterion inconsistent");
        return GoodSetWitness{{}, InjectionWitness{{}, Direction::WeaklyDecreasing}};
    }
    if (!b_mu_residue(pair, i, j - 1).is_zero()) return std::nullopt;
    if (b_residue(pair, i, j - 1).is_zero()) return std::nullopt;
    const std::vector<int> zeros = b_set(pair, i, j - 1);
    auto eps = find_injection(zeros, any, c_set(pair, i, j - 1), Direction::WeaklyDecreasing);
    if (!eps) return std::nullopt;
    if (!find_injection(zeros, any, b_mu_set(pair, i, j - 1), Direction::WeaklyIncreasing))
        return std::nullopt;
    std::vector<int> A = open_open(i, j);
    for (auto [s, t] : eps->pairs) A.erase(std::find(A.begin(), A.end(), t));
    if (classify_move_node(pair, i, j, A).cls != Classification::NonzeroHighWeight)
        throw internal_error("find_good_set_move: constructed set fails to classify high weight");
    return GoodSetWitness{std::move(A), std::move(*eps)};
}

std::optional<GoodSetWitness> find_good_set(const BranchingPair& pair, int i, int j) {
    if (!(1 <= i && i < j && j <= pair.n))
        throw std::domain_error("find_good_set: need 1 <= i < j <= n");
    return j == pair.n ? find_good_set_remove(pair, i) : find_good_set_move(pair, i, j);
}

namespace {

// enumerate all weakly decreasing injections sources -> codomain
void all_decreasing_injections(const std::vector<int>& sources, const std::vector<int>& codomain,
                               std::size_t at, std::vector<int>& image,
                               const std::function<void(const std::vector<int>&)>& sink) {
    if (at == sources.size()) {
        sink(image);
        return;
    }
    for (int t : codomain) {
        if (t > sources[at]) continue;
        if (std::find(image.begin(), image.end(), t) != image.end()) continue;
        image.push_back(t);
        all_decreasing_injections(sources, codomain, at + 1, image, sink);
        image.pop_back();
    }
}

}  // namespace

bool good_set_exists_kwise(const BranchingPair& pair, int i, int j) {
    if (!(1 <= i && i < j - 1 && j - 1 < pair.n - 1))
        throw std::domain_error("good_set_exists_kwise: need 1 <= i < j-1 < n-1");
    const std::vector<int> zeros = b_set(pair, i, j);
    const std::vector<int> cs = c_set(pair, i, j - 1);
    bool found = false;
    std::vector<int> image;
    auto try_image = [&](const std::vector<int>& img) {
        if (found) return;
        std::vector<int> domain{i};
        domain.insert(domain.end(), img.begin(), img.end());
        std::sort(domain.begin(), domain.end());
        auto any = [](int, int) { return true; };
        for (int k = 1; k <= j - 1; ++k) {
            if (!find_injection(domain, any, b_set(pair, i, j, k), Direction::WeaklyIncreasing))
                return;
        }
        found = true;
    };
    all_decreasing_injections(zeros, cs, 0, image, try_image);
    return found;
}

std::vector<std::pair<std::vector<int>, ClassifyResult>> classify_all_sets(
    const BranchingPair& pair, int i, int j) {
    if (!(1 <= i && i < j && j <= pair.n))
        throw std::domain_error("classify_all_sets: need 1 <= i < j <= n");
    const std::vector<int> inner = open_open(i, j);
    std::vector<std::pair<std::vector<int>, ClassifyResult>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
        std::vector<int> A;
        for (std::size_t b = 0; b < inner.size(); ++b)
            if (mask & (std::size_t{1} << b)) A.push_back(inner[b]);
        out.emplace_back(A, classify_lowering(pair, i, j, A));
    }
    return out;
}

}  // namespace lowop
