#include <doctest.h>

#include "lowop/errors.hpp"
#include "lowop/matching.hpp"
#include "lowop/poly.hpp"

using namespace lowop;

TEST_CASE("predecessor in D union {i}") {
    CHECK(predecessor({}, 1, 5) == 1);
    CHECK(predecessor({2, 4}, 1, 4) == 2);
    CHECK(predecessor({2, 4}, 1, 5) == 4);
}

TEST_CASE("h polynomial base cases") {
    PolyRing ring(4);
    auto x = [&](int q) { return IntPolynomial::var_x(ring, q); };

    CHECK(h_poly(ring, 1, 4, {}, {}) == IntPolynomial::constant(ring, 1));
    CHECK(h_poly(ring, 1, 4, {2, 3}, {}) == (x(2) - x(1)) * (x(3) - x(1)));
    CHECK(h_poly(ring, 1, 3, {}, {2}).is_zero());
    // the two fractions over (x_2 - x_1) collapse to 1
    CHECK(h_poly(ring, 1, 4, {3}, {2}) == IntPolynomial::constant(ring, 1));
}

TEST_CASE("k polynomial by definition") {
    PolyRing ring(4);
    auto x = [&](int q) { return IntPolynomial::var_x(ring, q); };
    auto y = [&](int q) { return IntPolynomial::var_y(ring, q); };

    CHECK(k_poly_def(ring, 1, 2, {}) == y(2) - x(1));
    CHECK(k_poly_def(ring, 1, 4, {2, 3}) == (y(2) - x(1)) * (y(3) - x(1)) * (y(4) - x(1)));
    CHECK(k_poly_def(ring, 1, 3, {}) == k_poly_rec(ring, 1, 3, {}));
}

TEST_CASE("k polynomial recursion agrees with the definition") {
    for (int i = 1; i <= 2; ++i) {
        for (int span = 1; span <= 4; ++span) {
            int j = i + span;
            PolyRing ring(j);
            std::vector<int> inner = open_open(i, j);
            for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
                std::vector<int> A;
                for (std::size_t b = 0; b < inner.size(); ++b)
                    if (mask & (std::size_t{1} << b)) A.push_back(inner[b]);
                CHECK(k_poly_def(ring, i, j, A) == k_poly_rec(ring, i, j, A));
            }
        }
    }
}

TEST_CASE("dropping the top index when it is outside A") {
    PolyRing ring(4);
    CHECK(k_poly_rec(ring, 1, 4, {2}) == k_poly_rec(ring, 1, 3, {2}));
}

TEST_CASE("K evaluation under the weight substitution") {
    BranchingPair pair = BranchingPair::make(3, {4, 2, 0}, {4, 1});
    CHECK(eval_K(pair, 1, 2, {}, 2).value == 2);  // mu_1 - lambda_2 mod 3
    CHECK(eval_K(pair, 1, 2, {}, 3).value == 2);
    CHECK(eval_K(pair, 1, 2, {}).value == 2);

    BranchingPair small = BranchingPair::make(2, {2, 1, 0}, {1, 1});
    CHECK(eval_K(small, 1, 3, {2}, 3).value == 0);
    CHECK_THROWS_AS(eval_K(small, 1, 3, {2}, 2), std::domain_error);  // j = n forces k = n

    // full A evaluates to the product of substituted factors
    BranchingPair quad = BranchingPair::make(2, {2, 1, 1, 0}, {2, 1, 1});
    long long prod = 1;
    for (int t = 2; t <= 3; ++t) {
        Substitution05 sub{quad, 3};
        prod = prod * mod_canonical(sub.y_value(t) - sub.x_value(1), quad.p) % quad.p;
    }
    CHECK(eval_K(quad, 1, 3, {2}, 3).value == prod);
}

TEST_CASE("H evaluation at a weight") {
    BranchingPair pair = BranchingPair::make(2, {2, 1, 0}, {1, 1});
    CHECK(eval_H_at_mu(pair, 1, 3, {}, {}).value == 1);
    CHECK(eval_H_at_mu(pair, 1, 3, {}, {2}).value == 0);
    // B empty: product of (t - mu_t) - (i - mu_i) over t in A
    long long expect = mod_canonical((2 - 1) - (1 - 1), 2);
    CHECK(eval_H_at_mu(pair, 1, 3, {2}, {}).value == expect);
}

TEST_CASE("reducing coefficients commutes with evaluation") {
    PolyRing ring(4);
    IntPolynomial k = k_poly_rec(ring, 1, 4, {2, 3});
    for (long long p : {2LL, 3LL, 5LL}) {
        std::vector<long long> values;
        for (int v = 0; v < ring.num_vars(); ++v) values.push_back((7 * v + 3) % 11 - 5);
        CHECK(k.eval_mod(values, p) == k.reduce_mod(p).eval_mod(values, p));
    }
}

TEST_CASE("matched injections force the K product form") {
    // whenever an increasing injection with vanishing residues exists on
    // (i..j)\A, the evaluation collapses to a product of b-residues
    std::vector<BranchingPair> pairs{
        BranchingPair::make(2, {2, 1, 0}, {1, 1}),
        BranchingPair::make(3, {4, 2, 0}, {4, 1}),
        BranchingPair::make(2, {3, 2, 1, 0}, {3, 2, 0}),
        BranchingPair::make(3, {3, 1, 1, 0}, {2, 1, 1}),
        BranchingPair::make(2, {2, 1, 1, 0}, {2, 1, 1}),
    };
    int verified = 0;
    for (const BranchingPair& pair : pairs) {
        for (int i = 1; i < pair.n; ++i) {
            for (int j = i + 1; j <= pair.n; ++j) {
                std::vector<int> inner = open_open(i, j);
                for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
                    std::vector<int> A;
                    for (std::size_t b = 0; b < inner.size(); ++b)
                        if (mask & (std::size_t{1} << b)) A.push_back(inner[b]);
                    std::vector<int> sources;
                    for (int a : inner)
                        if (!std::binary_search(A.begin(), A.end(), a)) sources.push_back(a);
                    int kmin = (j == pair.n) ? pair.n : 1;
                    for (int k = kmin; k <= pair.n; ++k) {
                        auto allowed = [&](int s, int t) {
                            return b_residue(pair, s, t, k).is_zero();
                        };
                        auto theta =
                            find_injection(sources, allowed, inner, Direction::WeaklyIncreasing);
                        if (!theta) continue;
                        long long prod = 1 % pair.p;
                        for (int t = i; t < j; ++t) {
                            bool in_image = false;
                            for (auto [s, tt] : theta->pairs) in_image = in_image || tt == t;
                            if (!in_image)
                                prod = prod * b_residue(pair, i, t, k).value % pair.p;
                        }
                        CHECK(eval_K(pair, i, j, A, k).value == prod);
                        ++verified;
                    }
                }
            }
        }
    }
    CHECK(verified > 50);
}

TEST_CASE("canonical text form") {
    PolyRing ring(3);
    CHECK(IntPolynomial(ring).dump() == "0");
    CHECK(IntPolynomial::constant(ring, -7).dump() == "-7");
    CHECK(k_poly_rec(ring, 1, 2, {}).dump() == "-x_1 + y_2");
    CHECK(k_poly_rec(ring, 1, 3, {2}).dump() == "x_1^2 - x_1*y_2 - x_1*y_3 + y_2*y_3");
}

TEST_CASE("exact division detects impossible quotients") {
    PolyRing ring(3);
    auto x1 = IntPolynomial::var_x(ring, 1);
    auto x2 = IntPolynomial::var_x(ring, 2);
    CHECK(divide_exact(x1 * x2 - x1 * x1, x1) == x2 - x1);
    CHECK_THROWS_AS(divide_exact(x1 * x2 + IntPolynomial::constant(ring, 1), x1),
                    internal_error);
}
