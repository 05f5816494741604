#include "lowop/nabla.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "lowop/errors.hpp"
#include "lowop/poly.hpp"

namespace lowop {

namespace {

long long inverse_mod(long long a, long long p) {
    long long inv = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return inv;
}

// conjugate shape: column heights of lambda
std::vector<int> column_heights(const Weight& lambda) {
    std::vector<int> heights;
    for (long long c = 1; c <= (lambda.empty() ? 0 : lambda[0]); ++c) {
        int h = 0;
        for (long long row : lambda)
            if (row >= c) ++h;
        heights.push_back(h);
    }
    return heights;
}

long long count_ssyt_from(const Weight& lambda, int n, int row, int col,
                          std::vector<std::vector<int>>& t) {
    int nrows = static_cast<int>(lambda.size());
    while (row < nrows && col >= lambda[static_cast<std::size_t>(row)]) {
        ++row;
        col = 0;
    }
    if (row == nrows) return 1;
    long long total = 0;
    int lo = 1;
    if (col > 0)
        lo = std::max(lo, t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0)
        lo = std::max(lo, t[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= n; ++v) {
        t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        total += count_ssyt_from(lambda, n, row, col + 1, t);
    }
    return total;
}

// enumerate (d_u) with sum m, 0 <= d_u <= cap_u
void compositions(const std::vector<int>& caps, int m, std::size_t at, std::vector<int>& d,
                  const std::function<void(const std::vector<int>&)>& sink) {
    if (at == caps.size()) {
        if (m == 0) sink(d);
        return;
    }
    int hi = std::min(caps[at], m);
    for (int x = 0; x <= hi; ++x) {
        d[at] = x;
        compositions(caps, m - x, at + 1, d, sink);
    }
    d[at] = 0;
}

}  // namespace

BranchingPair shift_to_polynomial(const BranchingPair& pair) {
    long long c = std::max(0LL, -pair.lambda.back());
    if (c == 0) return pair;
    BranchingPair out = pair;
    for (auto& v : out.lambda) v += c;
    for (auto& v : out.mu) v += c;
    return out;
}

long long ssyt_count(const Weight& lambda, int n) {
    Weight shape;
    for (long long v : lambda) {
        if (v < 0) throw std::invalid_argument("ssyt_count: shape entries must be >= 0");
        if (v > 0) shape.push_back(v);
    }
    if (!is_dominant(shape)) throw std::invalid_argument("ssyt_count: shape must be a partition");
    if (static_cast<int>(shape.size()) > n) return 0;
    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        t[r].assign(static_cast<std::size_t>(shape[r]), 0);
    return count_ssyt_from(shape, n, 0, 0, t);
}

CostandardModel CostandardModel::with_mu(const Weight& mu) const {
    CostandardModel out = *this;
    out.pair_ = BranchingPair::make(pair_.p, pair_.lambda, mu);
    return out;
}

long long CostandardModel::binom(long long a, long long b) const {
    if (b < 0 || b > a) return 0;
    return pascal_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

Weight CostandardModel::weight_of(const Monomial& m) const {
    const int n = pair_.n;
    Weight w(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            w[static_cast<std::size_t>(v)] += m[static_cast<std::size_t>(u * n + v)];
    return w;
}

Weight CostandardModel::weight_of(const ModVector& v) const {
    if (v.is_zero()) throw std::invalid_argument("weight_of: zero vector has no weight");
    Weight w = weight_of(v.terms.begin()->first);
    for (const auto& [m, c] : v.terms)
        if (weight_of(m) != w) throw std::invalid_argument("weight_of: vector not homogeneous");
    return w;
}

ModVector CostandardModel::add(const ModVector& a, const ModVector& b) const {
    ModVector out = a;
    for (const auto& [m, c] : b.terms) {
        auto it = out.terms.find(m);
        long long cur = ((it != out.terms.end() ? it->second : 0) + c) % pair_.p;
        if (cur == 0) {
            if (it != out.terms.end()) out.terms.erase(it);
        } else if (it != out.terms.end()) {
            it->second = cur;
        } else {
            out.terms.emplace(m, cur);
        }
    }
    return out;
}

ModVector CostandardModel::scale(long long c, const ModVector& v) const {
    c = mod_canonical(c, pair_.p);
    ModVector out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : v.terms) out.terms[m] = coeff * c % pair_.p;
    return out;
}

ModVector CostandardModel::mul(const ModVector& a, const ModVector& b) const {
    const int nn = pair_.n * pair_.n;
    ModVector out;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(static_cast<std::size_t>(nn));
            for (int t = 0; t < nn; ++t)
                m[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(
                    ma[static_cast<std::size_t>(t)] + mb[static_cast<std::size_t>(t)]);
            long long cur = ((out.terms.count(m) ? out.terms[m] : 0) + ca * cb) % pair_.p;
            if (cur == 0)
                out.terms.erase(m);
            else
                out.terms[m] = cur;
        }
    }
    return out;
}

ModVector CostandardModel::act_E(int l, int m, const ModVector& v) const {
    if (!(1 <= l && l < pair_.n)) throw std::domain_error("act_E: need 1 <= l < n");
    if (m < 0) throw std::domain_error("act_E: need m >= 0");
    if (m == 0) return v;
    const int n = pair_.n;
    const int src = l;      // 0-based column l+1
    const int dst = l - 1;  // 0-based column l
    ModVector out;
    for (const auto& [mono, coeff] : v.terms) {
        std::vector<int> caps(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            caps[static_cast<std::size_t>(u)] = mono[static_cast<std::size_t>(u * n + src)];
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        compositions(caps, m, 0, d, [&](const std::vector<int>& pick) {
            long long c = coeff;
            Monomial t = mono;
            for (int u = 0; u < n; ++u) {
                int du = pick[static_cast<std::size_t>(u)];
                if (du == 0) continue;
                c = c * binom(caps[static_cast<std::size_t>(u)], du) % pair_.p;
                t[static_cast<std::size_t>(u * n + src)] =
                    static_cast<std::uint8_t>(t[static_cast<std::size_t>(u * n + src)] - du);
                t[static_cast<std::size_t>(u * n + dst)] =
                    static_cast<std::uint8_t>(t[static_cast<std::size_t>(u * n + dst)] + du);
            }
            if (c == 0) return;
            long long cur = ((out.terms.count(t) ? out.terms[t] : 0) + c) % pair_.p;
            if (cur == 0)
                out.terms.erase(t);
            else
                out.terms[t] = cur;
        });
    }
    return out;
}

ModVector CostandardModel::act_F(int a, int b, const ModVector& v) const {
    if (!(1 <= a && a < b && b <= pair_.n)) throw std::domain_error("act_F: need 1 <= a < b <= n");
    const int n = pair_.n;
    const int src = a - 1;
    const int dst = b - 1;
    ModVector out;
    for (const auto& [mono, coeff] : v.terms) {
        for (int u = 0; u < n; ++u) {
            int e = mono[static_cast<std::size_t>(u * n + src)];
            if (e == 0) continue;
            Monomial t = mono;
            t[static_cast<std::size_t>(u * n + src)] = static_cast<std::uint8_t>(e - 1);
            t[static_cast<std::size_t>(u * n + dst)] =
                static_cast<std::uint8_t>(t[static_cast<std::size_t>(u * n + dst)] + 1);
            long long cur = ((out.terms.count(t) ? out.terms[t] : 0) + coeff * e) % pair_.p;
            if (cur == 0)
                out.terms.erase(t);
            else
                out.terms[t] = cur;
        }
    }
    return out;
}

ModVector CostandardModel::act_F_chain(int i, int j, const std::vector<int>& B,
                                       const ModVector& v) const {
    if (i == j) {
        if (!B.empty()) throw std::domain_error("act_F_chain: trivial chain takes empty B");
        return v;
    }
    if (!(1 <= i && i < j && j <= pair_.n))
        throw std::domain_error("act_F_chain: need 1 <= i < j <= n");
    std::vector<int> stops{i};
    for (int b : B) stops.push_back(b);
    stops.push_back(j);
    if (!std::is_sorted(stops.begin(), stops.end()))
        throw std::domain_error("act_F_chain: B must be a sorted subset of (i..j)");
    ModVector cur = v;
    for (std::size_t t = stops.size() - 1; t-- > 0;) cur = act_F(stops[t], stops[t + 1], cur);
    return cur;
}

void CostandardModel::echelon_insert(ModVector v) {
    for (auto it = v.terms.begin(); it != v.terms.end();) {
        auto hit = pivot_of_.find(it->first);
        if (hit == pivot_of_.end()) {
            ++it;
            continue;
        }
        long long c = it->second;
        Monomial at = it->first;
        v = add(v, scale(pair_.p - c, basis_[static_cast<std::size_t>(hit->second)]));
        it = v.terms.lower_bound(at);
    }
    if (v.is_zero()) return;
    v = scale(inverse_mod(v.terms.begin()->second, pair_.p), v);
    Monomial pivot = v.terms.begin()->first;
    for (std::size_t bi = 0; bi < basis_.size(); ++bi) {
        auto hit = basis_[bi].terms.find(pivot);
        if (hit == basis_[bi].terms.end()) continue;
        basis_[bi] = add(basis_[bi], scale(pair_.p - hit->second, v));
    }
    pivot_of_[pivot] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(v));
}

CostandardModel CostandardModel::build(const BranchingPair& pair) {
    if (pair.lambda.back() < 0)
        throw std::invalid_argument("CostandardModel: lambda_n must be >= 0 (shift first)");
    CostandardModel model;
    model.pair_ = pair;
    const int n = pair.n;
    long long r = 0;
    for (long long v : pair.lambda) r += v;
    model.degree_ = r;
    model.pascal_.assign(static_cast<std::size_t>(r + 2), {});
    for (std::size_t a = 0; a < model.pascal_.size(); ++a) {
        model.pascal_[a].assign(a + 1, 1);
        for (std::size_t b = 1; b < a; ++b)
            model.pascal_[a][b] = (model.pascal_[a - 1][b - 1] + model.pascal_[a - 1][b]) % pair.p;
    }

    const std::vector<int> heights = column_heights(pair.lambda);
    std::vector<std::vector<std::vector<int>>> column_choices;
    for (int h : heights) {
        std::vector<std::vector<int>> choices;
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int lo) {
            if (static_cast<int>(pick.size()) == h) {
                choices.push_back(pick);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                pick.push_back(v);
                rec(v + 1);
                pick.pop_back();
            }
        };
        rec(1);
        column_choices.push_back(std::move(choices));
    }

    ModVector unit;
    unit.terms[Monomial(static_cast<std::size_t>(n * n), 0)] = 1;

    // spanning set: products over columns of the column minors, canonical
    // left tableau against every column-strict right filling
    std::function<void(std::size_t, const ModVector&)> emit = [&](std::size_t col,
                                                                  const ModVector& acc) {
        if (col == column_choices.size()) {
            model.echelon_insert(acc);
            return;
        }
        for (const std::vector<int>& entries : column_choices[col]) {
            const int h = static_cast<int>(entries.size());
            std::vector<int> perm(static_cast<std::size_t>(h));
            for (int t = 0; t < h; ++t) perm[static_cast<std::size_t>(t)] = t;
            ModVector minor;
            do {
                int inversions = 0;
                for (int s = 0; s < h; ++s)
                    for (int t = s + 1; t < h; ++t)
                        if (perm[static_cast<std::size_t>(s)] > perm[static_cast<std::size_t>(t)])
                            ++inversions;
                Monomial m(static_cast<std::size_t>(n * n), 0);
                for (int row = 0; row < h; ++row) {
                    int vcol =
                        entries[static_cast<std::size_t>(perm[static_cast<std::size_t>(row)])] - 1;
                    m[static_cast<std::size_t>(row * n + vcol)] = static_cast<std::uint8_t>(
                        m[static_cast<std::size_t>(row * n + vcol)] + 1);
                }
                long long sign = (inversions % 2 == 0) ? 1 : pair.p - 1;
                long long cur = ((minor.terms.count(m) ? minor.terms[m] : 0) + sign) % pair.p;
                if (cur == 0)
                    minor.terms.erase(m);
                else
                    minor.terms[m] = cur;
            } while (std::next_permutation(perm.begin(), perm.end()));
            emit(col + 1, model.mul(acc, minor));
        }
    };
    emit(0, unit);

    long long expect = ssyt_count(pair.lambda, n);
    if (model.dimension() != expect)
        throw internal_error("CostandardModel: dimension " + std::to_string(model.dimension()) +
                             " does not match tableau count " + std::to_string(expect));
    return model;
}

std::vector<long long> CostandardModel::coords(const ModVector& v) const {
    std::vector<long long> out(basis_.size(), 0);
    ModVector rest = v;
    while (!rest.is_zero()) {
        auto hit = pivot_of_.find(rest.terms.begin()->first);
        if (hit == pivot_of_.end())
            throw internal_error("CostandardModel::coords: vector outside the module span");
        long long c = rest.terms.begin()->second;
        out[static_cast<std::size_t>(hit->second)] = c;
        rest = add(rest, scale(pair_.p - c, basis_[static_cast<std::size_t>(hit->second)]));
    }
    return out;
}

namespace {

struct HighWeightSolve {
    std::vector<int> group;    // basis indices of the weight space
    int nullity = 0;
    std::vector<long long> x;  // canonical kernel coefficients when nullity == 1
};

HighWeightSolve solve_high_weight(const CostandardModel& model, const Weight& mu) {
    if (static_cast<int>(mu.size()) != model.n() - 1)
        throw std::invalid_argument("high weight solve: mu must have length n-1");
    const long long p = model.p();
    HighWeightSolve out;
    long long rest = model.degree();
    for (long long v : mu) rest -= v;
    if (rest < 0) return out;
    Weight target(mu);
    target.push_back(rest);
    for (std::size_t bi = 0; bi < model.basis().size(); ++bi)
        if (model.weight_of(model.basis()[bi]) == target) out.group.push_back(static_cast<int>(bi));
    const std::size_t d = out.group.size();
    if (d == 0) return out;

    // stack the coordinate rows of every E-constraint and keep an RREF
    std::vector<std::vector<long long>> reduced;
    std::vector<std::size_t> pivots;
    auto feed = [&](std::vector<long long> row) {
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            long long c = row[pivots[t]];
            if (c == 0) continue;
            for (std::size_t u = 0; u < d; ++u)
                row[u] = (row[u] + (p - c) * reduced[t][u]) % p;
        }
        std::size_t pc = d;
        for (std::size_t u = 0; u < d; ++u)
            if (row[u] != 0) {
                pc = u;
                break;
            }
        if (pc == d) return;
        long long inv = inverse_mod(row[pc], p);
        for (std::size_t u = 0; u < d; ++u) row[u] = row[u] * inv % p;
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            long long c = reduced[t][pc];
            if (c == 0) continue;
            for (std::size_t u = 0; u < d; ++u)
                reduced[t][u] = (reduced[t][u] + (p - c) * row[u]) % p;
        }
        reduced.push_back(std::move(row));
        pivots.push_back(pc);
    };
    for (int l = 1; l <= model.n() - 2; ++l) {
        for (int m = 1; m <= model.degree(); ++m) {
            std::map<Monomial, std::vector<long long>> by_monomial;
            for (std::size_t gi = 0; gi < d; ++gi) {
                ModVector img =
                    model.act_E(l, m, model.basis()[static_cast<std::size_t>(out.group[gi])]);
                for (const auto& [mono, c] : img.terms) {
                    auto& row = by_monomial[mono];
                    row.resize(d, 0);
                    row[gi] = c;
                }
            }
            for (auto& [mono, row] : by_monomial) {
                row.resize(d, 0);
                feed(std::move(row));
            }
        }
    }
    out.nullity = static_cast<int>(d - reduced.size());
    if (out.nullity == 1) {
        out.x.assign(d, 0);
        std::vector<char> is_pivot(d, 0);
        for (std::size_t pc : pivots) is_pivot[pc] = 1;
        std::size_t free_col = d;
        for (std::size_t u = 0; u < d; ++u)
            if (!is_pivot[u]) {
                free_col = u;
                break;
            }
        out.x[free_col] = 1;
        for (std::size_t t = 0; t < reduced.size(); ++t)
            out.x[pivots[t]] = (p - reduced[t][free_col]) % p;
    }
    return out;
}

}  // namespace

int CostandardModel::high_weight_space_dim(const Weight& mu) const {
    return solve_high_weight(*this, mu).nullity;
}

ModVector CostandardModel::find_f_mu(const Weight& mu) const {
    HighWeightSolve sol = solve_high_weight(*this, mu);
    if (sol.nullity != 1)
        throw internal_error("find_f_mu: solution space has dimension " +
                             std::to_string(sol.nullity) + ", expected 1");
    ModVector f;
    for (std::size_t gi = 0; gi < sol.group.size(); ++gi)
        f = add(f, scale(sol.x[gi], basis_[static_cast<std::size_t>(sol.group[gi])]));
    if (f.is_zero()) throw internal_error("find_f_mu: produced the zero vector");
    return scale(inverse_mod(f.terms.begin()->second, pair_.p), f);
}

ModVector CostandardModel::apply_S(int i, int j, const std::vector<int>& A, const ModVector& f,
                                   const Weight& mu_prefix) const {
    if (f.is_zero()) return f;
    if (static_cast<int>(mu_prefix.size()) != pair_.n - 1)
        throw std::invalid_argument("apply_S: weight prefix must have length n-1");
    Weight w = weight_of(f);
    for (int q = 1; q < pair_.n; ++q)
        if (w[static_cast<std::size_t>(q - 1)] != mu_prefix[static_cast<std::size_t>(q - 1)])
            throw std::invalid_argument("apply_S: vector weight does not match the given prefix");
    const std::vector<int> inner = open_open(i, j);
    ModVector out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
        std::vector<int> B;
        for (std::size_t b = 0; b < inner.size(); ++b)
            if (mask & (std::size_t{1} << b)) B.push_back(inner[b]);
        long long scalar = eval_H_at(pair_.p, i, j, A, B, mu_prefix).value;
        if (scalar == 0) continue;
        out = add(out, scale(scalar, act_F_chain(i, j, B, f)));
    }
    return out;
}

ModVector CostandardModel::apply_phi(const SeqX& x, const ModVector& f) const {
    if (!validate_seq(x, pair_.n)) throw std::invalid_argument("apply_phi: invalid sequence");
    ModVector cur = f;
    for (std::size_t t = x.size(); t-- > 0;) {
        const Quad& q = x[t];
        if (q.i == q.j) continue;
        if (cur.is_zero()) return cur;
        Weight w = weight_of(cur);
        Weight prefix(w.begin(), w.end() - 1);
        cur = apply_S(q.i, q.j, q.A, cur, prefix);
        for (int l = q.j - 1; l >= q.k; --l) cur = act_E(l, 1, cur);
    }
    return cur;
}

bool CostandardModel::is_high_weight(const ModVector& v) const {
    for (int l = 1; l <= pair_.n - 2; ++l)
        for (int m = 1; m <= degree_; ++m)
            if (!act_E(l, m, v).is_zero()) return false;
    return true;
}

Classification CostandardModel::classify_lowering(int i, int j, const std::vector<int>& A) const {
    return classify_lowering(i, j, A, find_f_mu(pair_.mu));
}

Classification CostandardModel::classify_lowering(int i, int j, const std::vector<int>& A,
                                                  const ModVector& f_mu) const {
    ModVector w = apply_S(i, j, A, f_mu, pair_.mu);
    if (w.is_zero()) return Classification::Zero;
    return is_high_weight(w) ? Classification::NonzeroHighWeight
                             : Classification::NonzeroNotHighWeight;
}

void CostandardModel::dump_basis(std::ostream& out) const {
    for (std::size_t bi = 0; bi < basis_.size(); ++bi) {
        out << "b" << bi << " wt=";
        Weight w = weight_of(basis_[bi]);
        for (std::size_t t = 0; t < w.size(); ++t) out << (t ? "," : "") << w[t];
        for (const auto& [m, c] : basis_[bi].terms) {
            out << ' ' << c << ':';
            for (std::size_t t = 0; t < m.size(); ++t) out << static_cast<int>(m[t]);
        }
        out << '\n';
    }
}

void CostandardModel::dump_operator(const std::string& name, int arg1, int arg2,
                                    std::ostream& out) const {
    for (std::size_t bi = 0; bi < basis_.size(); ++bi) {
        ModVector img;
        if (name == "E")
            img = act_E(arg1, arg2, basis_[bi]);
        else if (name == "F")
            img = act_F(arg1, arg2, basis_[bi]);
        else
            throw std::invalid_argument("dump_operator: name must be E or F");
        std::vector<long long> c = coords(img);
        out << name << '(' << arg1 << ',' << arg2 << ") b" << bi << " ->";
        for (std::size_t t = 0; t < c.size(); ++t)
            if (c[t] != 0) out << ' ' << t << ':' << c[t];
        out << '\n';
    }
}

}  // namespace lowop
