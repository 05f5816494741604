#include "lowop/seq_graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <stdexcept>

#include "lowop/poly.hpp"

namespace lowop {

namespace {

bool quad_valid(const Quad& q, int n) {
    if (q.i == q.j) return q.i == q.k && q.A.empty() && 1 <= q.i && q.i <= n;
    if (!(1 <= q.i && q.i < q.j && q.j <= n)) return false;
    if (!(q.i <= q.k && q.k <= q.j)) return false;
    if (q.j == n && q.k != n) return false;
    if (!std::is_sorted(q.A.begin(), q.A.end())) return false;
    for (int a : q.A)
        if (!(q.i < a && a < q.j)) return false;
    return true;
}

std::vector<int> slice(const std::vector<int>& A, int lo, int hi) {
    std::vector<int> out;
    for (int a : A)
        if (lo < a && a < hi) out.push_back(a);
    return out;
}

bool contains(const std::vector<int>& A, int a) {
    return std::binary_search(A.begin(), A.end(), a);
}

}  // namespace

bool validate_seq(const SeqX& x, int n) {
    if (x.empty()) return false;
    int prev_j = 0;
    for (const Quad& q : x) {
        if (!quad_valid(q, n)) return false;
        if (q.i <= prev_j) return false;
        prev_j = q.j;
    }
    return true;
}

std::string encode_seq(const SeqX& x) {
    std::string out;
    for (const Quad& q : x) {
        out += "(" + std::to_string(q.i) + "," + std::to_string(q.k) + "," +
               std::to_string(q.j) + ",{";
        for (std::size_t t = 0; t < q.A.size(); ++t) {
            if (t) out += ",";
            out += std::to_string(q.A[t]);
        }
        out += "})";
    }
    return out;
}

std::vector<Transition> transitions(const SeqX& x, int n) {
    if (!validate_seq(x, n)) throw std::invalid_argument("transitions: invalid sequence");
    std::vector<Transition> out;
    for (std::size_t pos = 0; pos < x.size(); ++pos) {
        const Quad& q = x[pos];
        // ascending label order: l = i (rule 2), l in (i..k-1) (rule 3), l = k-1 (rule 1)
        if (!contains(q.A, q.i + 1) && q.i < q.k - 1) {
            SeqX target = x;
            target[pos].i = q.i + 1;
            out.push_back({q.i, 2, std::move(target)});
        }
        for (int l = q.i + 1; l < q.k - 1; ++l) {
            if (contains(q.A, l) && !contains(q.A, l + 1)) {
                SeqX target(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pos));
                target.push_back({q.i, l, l, slice(q.A, q.i, l)});
                target.push_back({l + 1, q.k, q.j, slice(q.A, l + 1, q.j)});
                target.insert(target.end(), x.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                              x.end());
                out.push_back({l, 3, std::move(target)});
            }
        }
        if (q.i < q.k && q.k < n) {
            SeqX target = x;
            target[pos].k = q.k - 1;
            out.push_back({q.k - 1, 1, std::move(target)});
        }
    }
    return out;
}

namespace {

std::vector<SeqX> closure_impl(const SeqX& x, int n, std::ostream* trace) {
    if (!validate_seq(x, n)) throw std::invalid_argument("closure: invalid sequence");
    std::vector<SeqX> out;
    std::set<std::string> seen;
    std::deque<SeqX> queue;
    queue.push_back(x);
    seen.insert(encode_seq(x));
    while (!queue.empty()) {
        SeqX cur = std::move(queue.front());
        queue.pop_front();
        out.push_back(cur);
        for (Transition& t : transitions(cur, n)) {
            std::string key = encode_seq(t.target);
            if (trace)
                *trace << encode_seq(cur) << '\t' << t.label << '\t' << t.rule << '\t' << key
                       << '\n';
            if (seen.insert(key).second) queue.push_back(std::move(t.target));
        }
    }
    return out;
}

}  // namespace

std::vector<SeqX> closure(const SeqX& x, int n) { return closure_impl(x, n, nullptr); }

std::vector<SeqX> closure_traced(const SeqX& x, int n, std::ostream& trace) {
    return closure_impl(x, n, &trace);
}

ResidueClass k_of_seq(const BranchingPair& pair, const SeqX& x) {
    if (!validate_seq(x, pair.n)) throw std::invalid_argument("k_of_seq: invalid sequence");
    long long acc = 1 % pair.p;
    for (const Quad& q : x) {
        if (q.i == q.j) continue;  // trivial factor 1
        acc = acc * eval_K(pair, q.i, q.j, q.A, q.k).value % pair.p;
    }
    return ResidueClass{acc, pair.p};
}

bool phi_vanishes(const BranchingPair& pair, const SeqX& x) {
    for (const SeqX& y : closure(x, pair.n))
        if (!k_of_seq(pair, y).is_zero()) return false;
    return true;
}

Weight phi_weight(const BranchingPair& pair, const SeqX& x) {
    if (!validate_seq(x, pair.n)) throw std::invalid_argument("phi_weight: invalid sequence");
    Weight nu = pair.mu;
    for (const Quad& q : x) {
        if (q.i < pair.n) nu[static_cast<std::size_t>(q.i - 1)] -= 1;
        if (q.k < pair.n) nu[static_cast<std::size_t>(q.k - 1)] += 1;
    }
    return nu;
}

namespace {

void extend_sequences(int n, int start, const SeqX& prefix, std::vector<SeqX>& out) {
    for (int i = start; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> inner = open_open(i, j);
            for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
                std::vector<int> A;
                for (std::size_t b = 0; b < inner.size(); ++b)
                    if (mask & (std::size_t{1} << b)) A.push_back(inner[b]);
                int kmin = (j == n) ? n : i;
                for (int k = kmin; k <= j; ++k) {
                    SeqX x = prefix;
                    x.push_back({i, k, j, A});
                    out.push_back(x);
                    extend_sequences(n, j + 1, x, out);
                }
            }
        }
    }
}

}  // namespace

std::vector<SeqX> enumerate_sequences(int n) {
    std::vector<SeqX> out;
    extend_sequences(n, 1, {}, out);
    return out;
}

}  // namespace lowop
