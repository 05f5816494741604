#include <algorithm>
#include <functional>
#include <string>

#include "lowop/nabla.hpp"
#include "lowop/poly.hpp"

namespace lowop {

namespace {

std::vector<int> slice(const std::vector<int>& A, int lo, int hi) {
    std::vector<int> out;
    for (int a : A)
        if (lo < a && a < hi) out.push_back(a);
    return out;
}

bool contains(const std::vector<int>& A, int a) {
    return std::binary_search(A.begin(), A.end(), a);
}

std::string case_tag(int i, int j, const std::vector<int>& A, int l, int m) {
    std::string s = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " A={";
    for (std::size_t t = 0; t < A.size(); ++t) s += (t ? "," : "") + std::to_string(A[t]);
    s += "} l=" + std::to_string(l) + " m=" + std::to_string(m);
    return s;
}

// the E-word prod_t E_t^(e_t) applied right to left
ModVector apply_e_word(const CostandardModel& model, const std::vector<long long>& exps,
                       const ModVector& v) {
    ModVector cur = v;
    for (int t = model.n() - 1; t >= 1; --t) {
        if (cur.is_zero()) return cur;
        cur = model.act_E(t, static_cast<int>(exps[static_cast<std::size_t>(t - 1)]), cur);
    }
    return cur;
}

std::vector<long long> word_exponents(const BranchingPair& pair, const SeqX& x) {
    std::vector<long long> exps = a_values(pair);
    for (const Quad& q : x)
        for (int t = q.i; t < q.k; ++t) exps[static_cast<std::size_t>(t - 1)] += 1;
    return exps;
}

}  // namespace

IdentityReport check_commutation_identities(const CostandardModel& model, int max_m) {
    IdentityReport report;
    const int n = model.n();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::vector<int> inner = open_open(i, j);
            for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
                std::vector<int> A;
                for (std::size_t b = 0; b < inner.size(); ++b)
                    if (mask & (std::size_t{1} << b)) A.push_back(inner[b]);
                for (int l = 1; l < n; ++l) {
                    const bool in_left = (l == i) || contains(A, l);
                    const bool in_right = (l + 1 == j) || contains(A, l + 1);
                    for (int m = 1; m <= max_m; ++m) {
                        for (const ModVector& v : model.basis()) {
                            ModVector lhs = model.act_E(l, m, model.act_F_chain(i, j, A, v));
                            ModVector rhs = model.act_F_chain(i, j, A, model.act_E(l, m, v));
                            if (in_left || in_right) {
                                ModVector u = model.act_E(l, m - 1, v);
                                u = model.act_F_chain(l + 1, j, slice(A, l + 1, j), u);
                                if (in_left && in_right && !u.is_zero()) {
                                    Weight w = model.weight_of(u);
                                    long long s =
                                        mod_canonical(w[static_cast<std::size_t>(l - 1)] -
                                                          w[static_cast<std::size_t>(l)] + 1 - m,
                                                      model.p());
                                    u = model.scale(s, u);
                                }
                                u = model.act_F_chain(i, l, slice(A, i, l), u);
                                if (in_left && !in_right) u = model.scale(model.p() - 1, u);
                                rhs = model.add(rhs, u);
                            }
                            ++report.checked;
                            if (!(lhs == rhs))
                                report.failures.push_back("commutation failed at " +
                                                          case_tag(i, j, A, l, m));
                        }
                    }
                }
            }
        }
    }
    return report;
}

IdentityReport check_word_scalar_identity(const CostandardModel& model) {
    IdentityReport report;
    const BranchingPair& pair = model.pair();
    ModVector f_mu = model.find_f_mu(pair.mu);
    ModVector f_lambda = apply_e_word(model, a_values(pair), f_mu);
    if (f_lambda.is_zero()) {
        report.skipped.push_back("normalization word sends f_mu to zero; pair skipped");
        return report;
    }
    for (const SeqX& x : enumerate_sequences(pair.n)) {
        ModVector lhs = apply_e_word(model, word_exponents(pair, x), model.apply_phi(x, f_mu));
        ModVector rhs = model.scale(k_of_seq(pair, x).value, f_lambda);
        ++report.checked;
        if (!(lhs == rhs))
            report.failures.push_back("word scalar identity failed at x=" + encode_seq(x));
    }
    return report;
}

IdentityReport check_chain_product_formula(const CostandardModel& model, int max_chains) {
    IdentityReport report;
    const BranchingPair& pair = model.pair();
    const int n = pair.n;
    ModVector f_mu = model.find_f_mu(pair.mu);
    ModVector f_lambda = apply_e_word(model, a_values(pair), f_mu);
    if (f_lambda.is_zero()) {
        report.skipped.push_back("normalization word sends f_mu to zero; pair skipped");
        return report;
    }
    std::vector<std::pair<int, int>> chain;
    auto run_case = [&]() {
        ModVector v = f_mu;
        for (std::size_t q = chain.size(); q-- > 0;) v = model.act_F(chain[q].first, chain[q].second, v);
        std::vector<long long> exps = a_values(pair);
        for (auto [d, dp] : chain)
            for (int t = d; t < dp; ++t) exps[static_cast<std::size_t>(t - 1)] += 1;
        ModVector lhs = apply_e_word(model, exps, v);
        long long scalar = 1 % pair.p;
        for (auto [d, dp] : chain)
            scalar = scalar * mod_canonical(pair.mu_(d) - pair.lambda_(d + 1), pair.p) % pair.p;
        ModVector rhs = model.scale(scalar, f_lambda);
        ++report.checked;
        if (!(lhs == rhs)) {
            std::string tag;
            for (auto [d, dp] : chain)
                tag += "F(" + std::to_string(d) + "," + std::to_string(dp) + ")";
            report.failures.push_back("chain product formula failed at " + tag);
        }
    };
    std::function<void(int, int)> rec = [&](int lo, int depth) {
        if (!chain.empty()) run_case();
        if (depth == max_chains) return;
        for (int d = lo; d < n; ++d) {
            for (int dp = d + 1; dp <= n; ++dp) {
                chain.emplace_back(d, dp);
                rec(dp, depth + 1);
                chain.pop_back();
            }
        }
    };
    rec(1, 0);
    return report;
}

IdentityReport check_transition_identity(const CostandardModel& model) {
    IdentityReport report;
    const BranchingPair& pair = model.pair();
    ModVector f_mu = model.find_f_mu(pair.mu);
    for (const SeqX& x : enumerate_sequences(pair.n)) {
        if (x.size() != 1) continue;
        ModVector phi = model.apply_phi(x, f_mu);
        for (const Transition& t : transitions(x, pair.n)) {
            ModVector lhs = model.act_E(t.label, 1, phi);
            ModVector rhs = model.apply_phi(t.target, f_mu);
            ++report.checked;
            if (!(lhs == rhs) && !(lhs == model.scale(pair.p - 1, rhs)))
                report.failures.push_back("transition identity failed at x=" + encode_seq(x) +
                                          " l=" + std::to_string(t.label));
        }
    }
    return report;
}

IdentityReport check_split_law(const CostandardModel& model) {
    IdentityReport report;
    const BranchingPair& pair = model.pair();
    ModVector f_mu = model.find_f_mu(pair.mu);
    for (const SeqX& x : enumerate_sequences(pair.n)) {
        if (x.size() != 2) continue;
        bool whole = model.apply_phi(x, f_mu).is_zero();
        bool left = model.apply_phi({x[0]}, f_mu).is_zero();
        bool right = model.apply_phi({x[1]}, f_mu).is_zero();
        ++report.checked;
        if (whole != (left || right))
            report.failures.push_back("split law failed at x=" + encode_seq(x));
    }
    return report;
}

IdentityReport verify_identities(const CostandardModel& model) {
    IdentityReport total;
    auto merge = [&](const IdentityReport& r) {
        total.checked += r.checked;
        total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
        total.skipped.insert(total.skipped.end(), r.skipped.begin(), r.skipped.end());
    };
    merge(check_commutation_identities(model, static_cast<int>(model.degree()) + 1));
    merge(check_word_scalar_identity(model));
    merge(check_chain_product_formula(model, 2));
    merge(check_transition_identity(model));
    merge(check_split_law(model));
    return total;
}

}  // namespace lowop
