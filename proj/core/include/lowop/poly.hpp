#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lowop/bigint.hpp"
#include "lowop/weights.hpp"

namespace lowop {

// Variable context x_1..x_{limit-1}, y_2..y_limit, in that order.
struct PolyRing {
    int limit = 2;

    explicit PolyRing(int limit_) : limit(limit_) {}
    int num_vars() const { return 2 * (limit - 1); }
    int x_index(int q) const;  // q in [1..limit-1]
    int y_index(int q) const;  // q in [2..limit]
    std::string var_name(int v) const;

    bool operator==(const PolyRing&) const = default;
};

using Exponents = std::vector<std::uint8_t>;

// graded-lex: first by total degree, ties by exponent vector compared from
// the first variable on (variable order x_1 < ... < y_limit)
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse exact-integer multivariate polynomial. No zero coefficients are
// stored; all arithmetic is exact.
class IntPolynomial {
public:
    explicit IntPolynomial(PolyRing ring) : ring_(ring) {}
    static IntPolynomial constant(PolyRing ring, long long c);
    static IntPolynomial var_x(PolyRing ring, int q);
    static IntPolynomial var_y(PolyRing ring, int q);

    const PolyRing& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Exponents, BigInt, GradedLexLess>& terms() const { return terms_; }

    void add_term(const Exponents& e, const BigInt& c);

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    bool operator==(const IntPolynomial& o) const;

    // Coefficient-wise reduction mod p (zero coefficients dropped).
    IntPolynomial reduce_mod(long long p) const;

    // Evaluate at the given variable assignment, reduced mod p.
    // values[v] is the integer substituted for variable index v.
    long long eval_mod(const std::vector<long long>& values, long long p) const;

    // Canonical sorted text form, leading term first.
    std::string dump() const;

private:
    PolyRing ring_;
    std::map<Exponents, BigInt, GradedLexLess> terms_;
};

// Exact quotient num/den; throws internal_error when the division is not
// exact (which signals an implementation bug, never bad input).
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// D_i(t) = max{s in D union {i} : s < t}; D sorted ascending, t > i.
int predecessor(const std::vector<int>& D, int i, int t);

// The polynomial H_{i,j}(A,B): the rational expression
//   sum_{D subset B\A} (-1)^|D| prod_{t in A}(x_t-x_{D_i(t)}) / prod_{t in B}(x_t-x_{D_i(t)})
// brought over one common denominator and divided out exactly.
IntPolynomial h_poly(PolyRing ring, int i, int j, const std::vector<int>& A,
                     const std::vector<int>& B);

// K_{i,j}(A) by its definition: sum_B H_{i,j}(A,B) prod_{t in B+{i}} (y_{t+1}-x_t).
IntPolynomial k_poly_def(PolyRing ring, int i, int j, const std::vector<int>& A);

// Same polynomial through the two-case recursion on j (the production path).
IntPolynomial k_poly_rec(PolyRing ring, int i, int j, const std::vector<int>& A);

// The weight-pair substitution of the evaluation map: x_q := res_p(q, mu_q),
// y_q := res_p(q, lambda_q + 1) for q <= k, y_q := res_p(q, mu_q + 1) for q > k.
struct Substitution05 {
    const BranchingPair& pair;
    int k;

    long long x_value(int q) const;  // 1 <= q < n
    long long y_value(int q) const;  // 1 < q <= k or k < q < n
};

// K^{mu,lambda,k}_{i,j}(A): evaluate K_{i,j}(A) under the substitution.
// Requires an admissible k (j = n forces k = n); throws std::domain_error.
ResidueClass eval_K(const BranchingPair& pair, int i, int j, const std::vector<int>& A, int k);
// k = n abbreviation.
ResidueClass eval_K(const BranchingPair& pair, int i, int j, const std::vector<int>& A);

// H^w_{i,j}(A,B): evaluate H_{i,j}(A,B) at x_q := res_p(q, w_q), where w is
// any weight prefix covering q in [i..j-1] (1-based).
ResidueClass eval_H_at(long long p, int i, int j, const std::vector<int>& A,
                       const std::vector<int>& B, const Weight& w);

// The mu special case: the scalar by which H_{i,j}(A,B) acts on a weight-mu vector.
ResidueClass eval_H_at_mu(const BranchingPair& pair, int i, int j, const std::vector<int>& A,
                          const std::vector<int>& B);

}  // namespace lowop
