#include "lowop/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lowop/errors.hpp"
#include "lowop/nabla.hpp"
#include "lowop/poly.hpp"
#include "lowop/seq_graph.hpp"

namespace lowop {

std::string mismatch_json(const Mismatch& m) {
    nlohmann::json j{{"p", m.p},       {"lambda", m.lambda},     {"mu", m.mu},
                     {"i", m.i},       {"j", m.j},               {"A", m.A},
                     {"check", m.check}, {"expected", m.expected}, {"got", m.got}};
    return j.dump();
}

void SweepReport::absorb(const SweepReport& other) {
    cases += other.cases;
    for (const auto& [k, v] : other.counts) counts[k] += v;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::vector<Weight> enumerate_lambdas(int n, long long max_first, long long max_total) {
    std::vector<Weight> out;
    Weight cur;
    std::function<void(int, long long, long long)> rec = [&](int at, long long cap,
                                                             long long left) {
        if (at == n - 1) {
            Weight full = cur;
            full.push_back(0);
            out.push_back(full);
            return;
        }
        for (long long v = 0; v <= std::min(cap, left); ++v) {
            cur.push_back(v);
            rec(at + 1, v, left - v);
            cur.pop_back();
        }
    };
    rec(0, max_first, max_total);
    // dominance requires non-increasing entries; recursion built them
    // descending already, but entries of value zero before nonzero ones are
    // impossible, so every emitted lambda is valid
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Weight> enumerate_interlacing_mus(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<Weight> out;
    Weight cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (long long v = lambda[static_cast<std::size_t>(i)];
             v <= lambda[static_cast<std::size_t>(i - 1)]; ++v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

namespace {

struct GridGroup {
    long long p;
    Weight lambda;
};

std::vector<GridGroup> grid_groups(const SweepOptions& opts) {
    std::vector<GridGroup> out;
    for (long long p : opts.primes)
        for (int n : opts.ranks)
            for (const Weight& lambda : enumerate_lambdas(n, opts.max_first, opts.max_total))
                out.push_back({p, lambda});
    return out;
}

SweepReport parallel_over_groups(const std::vector<GridGroup>& groups, int workers,
                                 const std::function<SweepReport(const GridGroup&)>& body) {
    workers = std::max(1, workers);
    std::vector<SweepReport> partial(groups.size());
    auto run_slice = [&](int w) {
        for (std::size_t g = static_cast<std::size_t>(w); g < groups.size();
             g += static_cast<std::size_t>(workers)) {
            try {
                partial[g] = body(groups[g]);
            } catch (const std::exception& e) {
                Mismatch m;
                m.p = groups[g].p;
                m.lambda = groups[g].lambda;
                m.check = "unhandled exception";
                m.expected = "completion";
                m.got = e.what();
                partial[g].mismatches.push_back(std::move(m));
            }
        }
    };
    if (workers == 1) {
        run_slice(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_slice, w);
        for (auto& t : pool) t.join();
    }
    SweepReport total;
    for (const SweepReport& r : partial) total.absorb(r);
    return total;
}

Mismatch make_mismatch(const BranchingPair& pair, int i, int j, const std::vector<int>& A,
                       std::string check, std::string expected, std::string got) {
    return Mismatch{pair.p,         pair.lambda,        pair.mu,       i, j, A,
                    std::move(check), std::move(expected), std::move(got)};
}

std::string yn(bool b) { return b ? "true" : "false"; }

void for_each_subset(const std::vector<int>& inner,
                     const std::function<void(const std::vector<int>&)>& body) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
        std::vector<int> A;
        for (std::size_t b = 0; b < inner.size(); ++b)
            if (mask & (std::size_t{1} << b)) A.push_back(inner[b]);
        body(A);
    }
}

}  // namespace

SweepReport run_agreement_sweep(const SweepOptions& opts, const Classifier& classifier) {
    Classifier cls_fn = classifier;
    if (!cls_fn)
        cls_fn = [](const BranchingPair& pair, int i, int j, const std::vector<int>& A) {
            return classify_lowering(pair, i, j, A).cls;
        };
    return parallel_over_groups(grid_groups(opts), opts.workers, [&](const GridGroup& g) {
        SweepReport rep;
        const int n = static_cast<int>(g.lambda.size());
        CostandardModel base = CostandardModel::build(
            BranchingPair::make(g.p, g.lambda, Weight(g.lambda.begin(), g.lambda.end() - 1)));
        for (const Weight& mu : enumerate_interlacing_mus(g.lambda)) {
            BranchingPair pair = BranchingPair::make(g.p, g.lambda, mu);
            CostandardModel model = base.with_mu(mu);
            ModVector f = model.find_f_mu(mu);
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for_each_subset(open_open(i, j), [&](const std::vector<int>& A) {
                        ++rep.cases;
                        Classification got = cls_fn(pair, i, j, A);
                        Classification oracle = model.classify_lowering(i, j, A, f);
                        rep.counts[to_string(oracle)] += 1;
                        if (got != oracle)
                            rep.mismatches.push_back(
                                make_mismatch(pair, i, j, A, "criteria vs module oracle",
                                              to_string(oracle), to_string(got)));
                        bool vanish_criterion = lowering_vanishes(pair, i, j, A);
                        bool vanish_closure = phi_vanishes(pair, {{i, j, j, A}});
                        if (vanish_criterion != vanish_closure)
                            rep.mismatches.push_back(make_mismatch(
                                pair, i, j, A, "vanishing criterion vs closure oracle",
                                yn(vanish_closure), yn(vanish_criterion)));
                    });
                }
            }
            // closure oracle vs direct module computation over all of V_n
            for (const SeqX& x : enumerate_sequences(n)) {
                ++rep.cases;
                bool closure_zero = phi_vanishes(pair, x);
                bool module_zero = model.apply_phi(x, f).is_zero();
                if (closure_zero != module_zero)
                    rep.mismatches.push_back(make_mismatch(
                        pair, x.front().i, x.front().j, x.front().A,
                        "closure oracle vs module on " + encode_seq(x), yn(module_zero),
                        yn(closure_zero)));
            }
        }
        return rep;
    });
}

SweepReport run_raised_vanishing_sweep(const SweepOptions& opts) {
    return parallel_over_groups(grid_groups(opts), opts.workers, [&](const GridGroup& g) {
        SweepReport rep;
        const int n = static_cast<int>(g.lambda.size());
        CostandardModel base = CostandardModel::build(
            BranchingPair::make(g.p, g.lambda, Weight(g.lambda.begin(), g.lambda.end() - 1)));
        for (const Weight& mu : enumerate_interlacing_mus(g.lambda)) {
            BranchingPair pair = BranchingPair::make(g.p, g.lambda, mu);
            CostandardModel model = base.with_mu(mu);
            ModVector f = model.find_f_mu(mu);
            for (int i = 1; i < n; ++i) {
                for (int j = i + 2; j - 1 < n - 1; ++j) {
                    for_each_subset(open_open(i, j), [&](const std::vector<int>& A) {
                        if (!std::binary_search(A.begin(), A.end(), j - 1)) return;
                        ++rep.cases;
                        SeqX x{{i, j - 1, j, A}};
                        bool criterion = raised_lowering_vanishes(pair, i, j, A);
                        bool closure_zero = phi_vanishes(pair, x);
                        bool module_zero = model.apply_phi(x, f).is_zero();
                        if (criterion != module_zero)
                            rep.mismatches.push_back(
                                make_mismatch(pair, i, j, A, "raised vanishing vs module",
                                              yn(module_zero), yn(criterion)));
                        if (closure_zero != module_zero)
                            rep.mismatches.push_back(
                                make_mismatch(pair, i, j, A, "raised vanishing closure vs module",
                                              yn(module_zero), yn(closure_zero)));
                    });
                }
            }
        }
        return rep;
    });
}

SweepReport run_existence_sweep(const SweepOptions& opts) {
    return parallel_over_groups(grid_groups(opts), opts.workers, [&](const GridGroup& g) {
        SweepReport rep;
        const int n = static_cast<int>(g.lambda.size());
        for (const Weight& mu : enumerate_interlacing_mus(g.lambda)) {
            BranchingPair pair = BranchingPair::make(g.p, g.lambda, mu);
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    ++rep.cases;
                    bool has_high_weight = false;
                    for (const auto& [A, res] : classify_all_sets(pair, i, j))
                        has_high_weight =
                            has_high_weight || res.cls == Classification::NonzeroHighWeight;
                    try {
                        auto witness = find_good_set(pair, i, j);
                        if (witness.has_value() != has_high_weight)
                            rep.mismatches.push_back(make_mismatch(
                                pair, i, j, {}, "existence criterion vs exhaustive classification",
                                yn(has_high_weight), yn(witness.has_value())));
                        if (witness &&
                            classify_lowering(pair, i, j, witness->A).cls !=
                                Classification::NonzeroHighWeight)
                            rep.mismatches.push_back(make_mismatch(
                                pair, i, j, witness->A, "witness reclassification",
                                "NonzeroHighWeight",
                                to_string(classify_lowering(pair, i, j, witness->A).cls)));
                    } catch (const internal_error& e) {
                        rep.mismatches.push_back(make_mismatch(pair, i, j, {},
                                                               "existence witness construction",
                                                               "witness", e.what()));
                    }
                    if (i < j - 1 && j - 1 < n - 1) {
                        bool kwise = good_set_exists_kwise(pair, i, j);
                        if (kwise != has_high_weight)
                            rep.mismatches.push_back(make_mismatch(
                                pair, i, j, {}, "k-indexed existence route vs exhaustive",
                                yn(has_high_weight), yn(kwise)));
                    }
                }
            }
        }
        return rep;
    });
}

SweepReport run_polynomial_suite(int max_span) {
    SweepReport rep;
    std::vector<std::pair<int, int>> ranges;  // (i, span)
    for (int i = 1; i <= 3; ++i)
        for (int span = 1; span <= std::min(4, max_span); ++span) ranges.emplace_back(i, span);
    for (int span = 5; span <= max_span; ++span) ranges.emplace_back(1, span);
    for (auto [i, span] : ranges) {
        const int j = i + span;
        PolyRing ring(j);
        for_each_subset(open_open(i, j), [&](const std::vector<int>& A) {
            ++rep.cases;
            try {
                // the definitional expansion runs the exact division for every B
                IntPolynomial def = k_poly_def(ring, i, j, A);
                IntPolynomial rec = k_poly_rec(ring, i, j, A);
                if (!(def == rec)) {
                    Mismatch m;
                    m.i = i;
                    m.j = j;
                    m.A = A;
                    m.check = "k polynomial definition vs recursion";
                    m.expected = def.dump();
                    m.got = rec.dump();
                    rep.mismatches.push_back(m);
                }
            } catch (const internal_error& e) {
                Mismatch m;
                m.i = i;
                m.j = j;
                m.A = A;
                m.check = "exact division";
                m.expected = "exact";
                m.got = e.what();
                rep.mismatches.push_back(m);
            }
        });
    }
    return rep;
}

SweepReport run_identity_suite(const SweepOptions& opts) {
    std::vector<GridGroup> groups;
    for (long long p : opts.primes)
        for (int n : opts.ranks)
            for (const Weight& lambda : enumerate_lambdas(n, opts.max_total, opts.max_total))
                groups.push_back({p, lambda});
    return parallel_over_groups(groups, opts.workers, [&](const GridGroup& g) {
        SweepReport rep;
        CostandardModel base = CostandardModel::build(
            BranchingPair::make(g.p, g.lambda, Weight(g.lambda.begin(), g.lambda.end() - 1)));
        auto absorb_identity = [&](const char* name, const IdentityReport& r) {
            rep.cases += r.checked;
            rep.counts[name] += r.checked;
            for (const std::string& f : r.failures) {
                Mismatch m;
                m.p = g.p;
                m.lambda = g.lambda;
                m.check = std::string(name) + ": " + f;
                m.expected = "identity";
                m.got = "failure";
                rep.mismatches.push_back(m);
            }
            for (const std::string& s : r.skipped) rep.notes.push_back(s);
        };
        absorb_identity("commutation",
                        check_commutation_identities(base, static_cast<int>(base.degree()) + 1));
        for (const Weight& mu : enumerate_interlacing_mus(g.lambda)) {
            CostandardModel model = base.with_mu(mu);
            absorb_identity("word scalar", check_word_scalar_identity(model));
            absorb_identity("chain product", check_chain_product_formula(model, 2));
            absorb_identity("transition", check_transition_identity(model));
            absorb_identity("split law", check_split_law(model));
        }
        return rep;
    });
}

namespace {

std::vector<Weight> dominant_weights(int len, long long max_entry) {
    std::vector<Weight> out;
    Weight cur;
    std::function<void(int, long long)> rec = [&](int at, long long cap) {
        if (at == len) {
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= cap; ++v) {
            cur.push_back(v);
            rec(at + 1, v);
            cur.pop_back();
        }
    };
    rec(0, max_entry);
    return out;
}

}  // namespace

SweepReport run_structural_suite(const SweepOptions& opts) {
    return parallel_over_groups(grid_groups(opts), opts.workers, [&](const GridGroup& g) {
        SweepReport rep;
        const int n = static_cast<int>(g.lambda.size());
        CostandardModel base = CostandardModel::build(
            BranchingPair::make(g.p, g.lambda, Weight(g.lambda.begin(), g.lambda.end() - 1)));

        // branching multiplicities
        for (const Weight& mu : dominant_weights(n - 1, g.lambda[0])) {
            ++rep.cases;
            int dim = base.high_weight_space_dim(mu);
            int expect = interlaces(g.lambda, mu) ? 1 : 0;
            if (dim != expect) {
                Mismatch m;
                m.p = g.p;
                m.lambda = g.lambda;
                m.mu = mu;
                m.check = "branching dimension";
                m.expected = std::to_string(expect);
                m.got = std::to_string(dim);
                rep.mismatches.push_back(m);
            }
        }

        for (const Weight& mu : enumerate_interlacing_mus(g.lambda)) {
            BranchingPair pair = BranchingPair::make(g.p, g.lambda, mu);

            // zero-set splitting identity
            for (int i = 1; i < n - 1; ++i) {
                for (int j = i + 1; j <= n - 1; ++j) {
                    for (int k = 1; k <= j; ++k) {
                        ++rep.cases;
                        std::vector<int> lhs = b_set(pair, i, j, k);
                        std::vector<int> rhs = k >= i ? b_set(pair, i, k) : std::vector<int>{};
                        for (int a : b_mu_set(pair, i, j))
                            if (a >= k) rhs.push_back(a);
                        std::sort(rhs.begin(), rhs.end());
                        rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
                        if (lhs != rhs)
                            rep.mismatches.push_back(make_mismatch(
                                pair, i, j, {k}, "zero-set splitting identity", "equal sets",
                                "differ"));
                    }
                }
            }

            // pi-bar equals pi below the last component
            for (int i = 1; i < n; ++i) {
                for (int j = i + 2; j - 1 < n - 1; ++j) {
                    for_each_subset(open_open(i, j - 1), [&](const std::vector<int>& M) {
                        const int N = static_cast<int>(components(M).size());
                        for (int v = 1; v <= N; ++v) {
                            ++rep.cases;
                            bool bar = condition_pi_bar(pair, i, j, M, v);
                            bool plain = condition_pi(pair, i, j, M, v);
                            if (bar != plain)
                                rep.mismatches.push_back(make_mismatch(
                                    pair, i, j, M, "pi-bar vs pi at v=" + std::to_string(v),
                                    yn(plain), yn(bar)));
                        }
                    });
                }
            }

            // shift invariance of every classification
            for (long long c : {1LL, 2LL, 3LL}) {
                Weight lam = g.lambda, m2 = mu;
                for (auto& v : lam) v += c;
                for (auto& v : m2) v += c;
                BranchingPair shifted = BranchingPair::make(g.p, lam, m2);
                for (int i = 1; i < n; ++i) {
                    for (int j = i + 1; j <= n; ++j) {
                        for_each_subset(open_open(i, j), [&](const std::vector<int>& A) {
                            ++rep.cases;
                            ClassifyResult a = classify_lowering(pair, i, j, A);
                            ClassifyResult b = classify_lowering(shifted, i, j, A);
                            bool same = a.cls == b.cls;
                            if (same && a.nu) {
                                Weight nu_shift = *a.nu;
                                for (auto& v : nu_shift) v += c;
                                same = b.nu && *b.nu == nu_shift;
                            }
                            if (!same)
                                rep.mismatches.push_back(make_mismatch(
                                    pair, i, j, A, "shift invariance c=" + std::to_string(c),
                                    to_string(a.cls), to_string(b.cls)));
                        });
                    }
                }
            }
        }
        return rep;
    });
}

SweepReport run_locked_examples() {
    SweepReport rep;
    struct Golden {
        long long p;
        Weight lambda;
        Weight mu;
        int i, j;
        std::vector<int> A;
        Classification expect;
        std::optional<Weight> nu;
    };
    const std::vector<Golden> cases{
        {2, {2, 1, 0}, {1, 1}, 1, 3, {}, Classification::NonzeroNotHighWeight, {}},
        {2, {2, 1, 0}, {1, 1}, 1, 3, {2}, Classification::Zero, {}},
        {3, {4, 2, 0}, {4, 1}, 1, 2, {}, Classification::NonzeroHighWeight, Weight{3, 2}},
        {2, {3, 2, 1, 0}, {3, 2, 0}, 1, 3, {2}, Classification::NonzeroHighWeight,
         Weight{2, 2, 1}},
    };
    for (const Golden& c : cases) {
        ++rep.cases;
        BranchingPair pair = BranchingPair::make(c.p, c.lambda, c.mu);
        ClassifyResult got = classify_lowering(pair, c.i, c.j, c.A);
        if (got.cls != c.expect || (c.nu && got.nu != c.nu)) {
            rep.mismatches.push_back(make_mismatch(pair, c.i, c.j, c.A, "locked example",
                                                   to_string(c.expect), to_string(got.cls)));
            continue;
        }
        CostandardModel model = CostandardModel::build(pair);
        Classification oracle = model.classify_lowering(c.i, c.j, c.A);
        if (oracle != c.expect)
            rep.mismatches.push_back(make_mismatch(pair, c.i, c.j, c.A, "locked example vs oracle",
                                                   to_string(c.expect), to_string(oracle)));
    }
    return rep;
}

ResultRecord make_case_record(const BranchingPair& pair, int i, int j, const std::vector<int>& A,
                              bool with_checks) {
    ResultRecord r;
    r.p = pair.p;
    r.lambda = pair.lambda;
    r.mu = pair.mu;
    r.i = i;
    r.j = j;
    r.A = A;
    ClassifyResult res = classify_lowering(pair, i, j, A);
    r.cls = res.cls;
    r.nu = res.nu;
    r.witness_d = res.witness_d;
    if (with_checks) {
        r.checks.closure_oracle =
            (res.cls == Classification::Zero) == phi_vanishes(pair, {{i, j, j, A}});
        BranchingPair poly_pair = shift_to_polynomial(pair);
        CostandardModel model = CostandardModel::build(poly_pair);
        r.checks.nabla_oracle = model.classify_lowering(i, j, A) == res.cls;
    }
    return r;
}

std::vector<ResultRecord> enumerate_case_records(const BranchingPair& pair, int i, int j,
                                                 bool with_checks) {
    std::vector<ResultRecord> out;
    for_each_subset(open_open(i, j),
                    [&](const std::vector<int>& A) { out.push_back(make_case_record(pair, i, j, A, with_checks)); });
    return out;
}

std::vector<ResultRecord> run_grid_records(const SweepOptions& opts, bool with_checks) {
    std::vector<GridGroup> groups = grid_groups(opts);
    std::vector<std::vector<ResultRecord>> partial(groups.size());
    auto group_body = [&](std::size_t g) {
        const Weight& lambda = groups[g].lambda;
        const long long p = groups[g].p;
        const int n = static_cast<int>(lambda.size());
        std::optional<CostandardModel> model_base;
        if (with_checks)
            model_base = CostandardModel::build(
                BranchingPair::make(p, lambda, Weight(lambda.begin(), lambda.end() - 1)));
        for (const Weight& mu : enumerate_interlacing_mus(lambda)) {
            BranchingPair pair = BranchingPair::make(p, lambda, mu);
            std::optional<CostandardModel> model;
            std::optional<ModVector> f;
            if (with_checks) {
                model = model_base->with_mu(mu);
                f = model->find_f_mu(mu);
            }
            for (int i = 1; i < n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for_each_subset(open_open(i, j), [&](const std::vector<int>& A) {
                        ResultRecord r = make_case_record(pair, i, j, A, false);
                        if (with_checks) {
                            r.checks.closure_oracle = (r.cls == Classification::Zero) ==
                                                      phi_vanishes(pair, {{i, j, j, A}});
                            r.checks.nabla_oracle =
                                model->classify_lowering(i, j, A, *f) == r.cls;
                        }
                        partial[g].push_back(std::move(r));
                    });
                }
            }
        }
    };
    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        for (std::size_t g = 0; g < groups.size(); ++g) group_body(g);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                for (std::size_t g = static_cast<std::size_t>(w); g < groups.size();
                     g += static_cast<std::size_t>(workers))
                    group_body(g);
            });
        for (auto& t : pool) t.join();
    }
    std::vector<ResultRecord> out;
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
    return out;
}

}  // namespace lowop
