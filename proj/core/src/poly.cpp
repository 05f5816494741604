#include "lowop/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lowop/errors.hpp"

namespace lowop {

int PolyRing::x_index(int q) const {
    if (!(1 <= q && q < limit)) throw std::domain_error("PolyRing: x index out of range");
    return q - 1;
}

int PolyRing::y_index(int q) const {
    if (!(2 <= q && q <= limit)) throw std::domain_error("PolyRing: y index out of range");
    return (limit - 1) + (q - 2);
}

std::string PolyRing::var_name(int v) const {
    if (v < limit - 1) return "x_" + std::to_string(v + 1);
    return "y_" + std::to_string(v - (limit - 1) + 2);
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

IntPolynomial IntPolynomial::constant(PolyRing ring, long long c) {
    IntPolynomial out(ring);
    out.add_term(Exponents(static_cast<std::size_t>(ring.num_vars()), 0), BigInt(c));
    return out;
}

IntPolynomial IntPolynomial::var_x(PolyRing ring, int q) {
    IntPolynomial out(ring);
    Exponents e(static_cast<std::size_t>(ring.num_vars()), 0);
    e[static_cast<std::size_t>(ring.x_index(q))] = 1;
    out.add_term(e, BigInt(1));
    return out;
}

IntPolynomial IntPolynomial::var_y(PolyRing ring, int q) {
    IntPolynomial out(ring);
    Exponents e(static_cast<std::size_t>(ring.num_vars()), 0);
    e[static_cast<std::size_t>(ring.y_index(q))] = 1;
    out.add_term(e, BigInt(1));
    return out;
}

void IntPolynomial::add_term(const Exponents& e, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (ring_ != o.ring_) throw std::invalid_argument("IntPolynomial: ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (ring_ != o.ring_) throw std::invalid_argument("IntPolynomial: ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("IntPolynomial: ring mismatch");
    IntPolynomial out(a.ring_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

IntPolynomial IntPolynomial::reduce_mod(long long p) const {
    IntPolynomial out(ring_);
    for (const auto& [e, c] : terms_) out.add_term(e, BigInt(c.mod_canonical(p)));
    return out;
}

long long IntPolynomial::eval_mod(const std::vector<long long>& values, long long p) const {
    long long acc = 0;
    for (const auto& [e, c] : terms_) {
        long long term = c.mod_canonical(p);
        for (std::size_t v = 0; v < e.size(); ++v) {
            long long base = mod_canonical(values[v], p);
            for (int r = 0; r < e[v]; ++r) term = term * base % p;
        }
        acc = (acc + term) % p;
    }
    return acc;
}

std::string IntPolynomial::dump() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c.sign() < 0;
        std::string mag = (neg ? -c : c).str();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.var_name(static_cast<int>(v));
            if (e[v] > 1) mono += "^" + std::to_string(static_cast<int>(e[v]));
        }
        if (mono.empty()) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += mono;
        }
    }
    return out;
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw internal_error("divide_exact: zero divisor");
    if (num.ring() != den.ring()) throw std::invalid_argument("divide_exact: ring mismatch");
    IntPolynomial quotient(num.ring());
    IntPolynomial rest = num;
    const auto& dlead = *den.terms().rbegin();
    while (!rest.is_zero()) {
        const auto& rlead = *rest.terms().rbegin();
        Exponents qe(rlead.first.size());
        for (std::size_t v = 0; v < qe.size(); ++v) {
            if (rlead.first[v] < dlead.first[v])
                throw internal_error("divide_exact: non-exact polynomial division");
            qe[v] = static_cast<std::uint8_t>(rlead.first[v] - dlead.first[v]);
        }
        BigInt qc = rlead.second.divide_exact(dlead.second);
        IntPolynomial step(num.ring());
        step.add_term(qe, qc);
        quotient += step;
        rest -= step * den;
    }
    return quotient;
}

int predecessor(const std::vector<int>& D, int i, int t) {
    if (t <= i) throw std::domain_error("predecessor: need t > i");
    int best = i;
    for (int s : D)
        if (s < t && s > best) best = s;
    return best;
}

namespace {

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of_interval(const std::vector<int>& A, int i, int j) {
    for (int a : A)
        if (!(i < a && a < j)) return false;
    return std::is_sorted(A.begin(), A.end());
}

IntPolynomial binomial_x(PolyRing ring, int t, int s) {
    return IntPolynomial::var_x(ring, t) - IntPolynomial::var_x(ring, s);
}

}  // namespace

IntPolynomial h_poly(PolyRing ring, int i, int j, const std::vector<int>& A,
                     const std::vector<int>& B) {
    if (!(1 <= i && i < j && j <= ring.limit))
        throw std::domain_error("h_poly: need 1 <= i < j <= ring limit");
    if (!subset_of_interval(A, i, j) || !subset_of_interval(B, i, j))
        throw std::domain_error("h_poly: A, B must be sorted subsets of (i..j)");

    const std::vector<int> pool = set_difference_sorted(B, A);  // B \ A, D ranges here
    // every factor (x_t - x_s) that can occur in some denominator
    std::vector<std::pair<int, int>> denom_factors;
    for (int t : B) {
        if (i < t) denom_factors.emplace_back(t, i);
        for (int s : pool)
            if (s < t) denom_factors.emplace_back(t, s);
    }
    IntPolynomial common = IntPolynomial::constant(ring, 1);
    for (auto [t, s] : denom_factors) common = common * binomial_x(ring, t, s);

    IntPolynomial numerator(ring);
    const std::size_t m = pool.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> D;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t{1} << b)) D.push_back(pool[b]);
        IntPolynomial term =
            IntPolynomial::constant(ring, (D.size() % 2 == 0) ? 1 : -1);
        for (int t : A) term = term * binomial_x(ring, t, predecessor(D, i, t));
        // common / (this D's denominator): skip exactly the factors used
        std::vector<int> used(B.size());
        for (std::size_t b = 0; b < B.size(); ++b) used[b] = predecessor(D, i, B[b]);
        for (auto [t, s] : denom_factors) {
            bool skipped = false;
            for (std::size_t b = 0; b < B.size(); ++b) {
                if (B[b] == t && used[b] == s) {
                    skipped = true;
                    break;
                }
            }
            if (!skipped) term = term * binomial_x(ring, t, s);
        }
        numerator += term;
    }
    return divide_exact(numerator, common);
}

IntPolynomial k_poly_def(PolyRing ring, int i, int j, const std::vector<int>& A) {
    if (!(1 <= i && i < j && j <= ring.limit))
        throw std::domain_error("k_poly_def: need 1 <= i < j <= ring limit");
    if (!subset_of_interval(A, i, j))
        throw std::domain_error("k_poly_def: A must be a sorted subset of (i..j)");
    const std::vector<int> inner = open_open(i, j);
    IntPolynomial out(ring);
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
        std::vector<int> B;
        for (std::size_t b = 0; b < inner.size(); ++b)
            if (mask & (std::size_t{1} << b)) B.push_back(inner[b]);
        IntPolynomial term = h_poly(ring, i, j, A, B);
        term = term * (IntPolynomial::var_y(ring, i + 1) - IntPolynomial::var_x(ring, i));
        for (int t : B)
            term = term * (IntPolynomial::var_y(ring, t + 1) - IntPolynomial::var_x(ring, t));
        out += term;
    }
    return out;
}

namespace {

IntPolynomial k_poly_rec_impl(PolyRing ring, int i, int j, std::vector<int> A,
                              std::map<std::pair<int, std::vector<int>>, IntPolynomial>& memo) {
    if (j == i + 1) return IntPolynomial::var_y(ring, j) - IntPolynomial::var_x(ring, i);
    auto key = std::make_pair(j, A);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    IntPolynomial out(ring);
    if (!std::binary_search(A.begin(), A.end(), j - 1)) {
        out = k_poly_rec_impl(ring, i, j - 1, A, memo);
    } else {
        int k = i;  // max [i..j) \ A; i itself is never in A
        for (int t = j - 1; t >= i; --t) {
            if (!std::binary_search(A.begin(), A.end(), t)) {
                k = t;
                break;
            }
        }
        std::vector<int> without = A;
        without.erase(std::find(without.begin(), without.end(), j - 1));
        IntPolynomial factor = IntPolynomial::var_y(ring, j) - IntPolynomial::var_x(ring, k);
        out = k_poly_rec_impl(ring, i, j - 1, without, memo) * factor;
        if (k != i) {
            std::vector<int> with_k = without;
            with_k.insert(std::lower_bound(with_k.begin(), with_k.end(), k), k);
            out += k_poly_rec_impl(ring, i, j - 1, with_k, memo);
        }
    }
    memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

IntPolynomial k_poly_rec(PolyRing ring, int i, int j, const std::vector<int>& A) {
    if (!(1 <= i && i < j && j <= ring.limit))
        throw std::domain_error("k_poly_rec: need 1 <= i < j <= ring limit");
    if (!subset_of_interval(A, i, j))
        throw std::domain_error("k_poly_rec: A must be a sorted subset of (i..j)");
    // memo confined to this call; callers on other threads never share it
    std::map<std::pair<int, std::vector<int>>, IntPolynomial> memo;
    return k_poly_rec_impl(ring, i, j, A, memo);
}

long long Substitution05::x_value(int q) const {
    if (!(1 <= q && q < pair.n)) throw std::domain_error("Substitution05: x_q undefined");
    return mod_canonical(q - pair.mu_(q), pair.p);
}

long long Substitution05::y_value(int q) const {
    if (1 < q && q <= k) return mod_canonical(q - pair.lambda_(q) - 1, pair.p);
    if (k < q && q < pair.n) return mod_canonical(q - pair.mu_(q) - 1, pair.p);
    throw std::domain_error("Substitution05: y_" + std::to_string(q) +
                            " undefined for k=" + std::to_string(k));
}

ResidueClass eval_K(const BranchingPair& pair, int i, int j, const std::vector<int>& A, int k) {
    if (!(1 <= i && i < j && j <= pair.n)) throw std::domain_error("eval_K: need 1 <= i < j <= n");
    if (!valid_k_for_eval(pair.n, j, k))
        throw std::domain_error("eval_K: k=" + std::to_string(k) +
                                " outside the admissible range for j=" + std::to_string(j));
    PolyRing ring(pair.n);
    IntPolynomial K = k_poly_rec(ring, i, j, A);
    Substitution05 sub{pair, k};
    std::vector<long long> values(static_cast<std::size_t>(ring.num_vars()), 0);
    for (int q = 1; q < pair.n; ++q)
        values[static_cast<std::size_t>(ring.x_index(q))] = sub.x_value(q);
    for (int q = i + 1; q <= j; ++q)
        values[static_cast<std::size_t>(ring.y_index(q))] = sub.y_value(q);
    return ResidueClass{K.eval_mod(values, pair.p), pair.p};
}

ResidueClass eval_K(const BranchingPair& pair, int i, int j, const std::vector<int>& A) {
    return eval_K(pair, i, j, A, pair.n);
}

ResidueClass eval_H_at(long long p, int i, int j, const std::vector<int>& A,
                       const std::vector<int>& B, const Weight& w) {
    if (static_cast<int>(w.size()) < j - 1)
        throw std::invalid_argument("eval_H_at: weight prefix too short");
    PolyRing ring(j);
    IntPolynomial H = h_poly(ring, i, j, A, B);
    std::vector<long long> values(static_cast<std::size_t>(ring.num_vars()), 0);
    for (int q = 1; q < j; ++q)
        values[static_cast<std::size_t>(ring.x_index(q))] =
            mod_canonical(q - w[static_cast<std::size_t>(q - 1)], p);
    return ResidueClass{H.eval_mod(values, p), p};
}

ResidueClass eval_H_at_mu(const BranchingPair& pair, int i, int j, const std::vector<int>& A,
                          const std::vector<int>& B) {
    return eval_H_at(pair.p, i, j, A, B, pair.mu);
}

}  // namespace lowop
