#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lowop/criteria.hpp"
#include "lowop/seq_graph.hpp"
#include "lowop/weights.hpp"

namespace lowop {

// Monomial in the matrix coordinates c_{u,v}, stored as an n x n exponent
// matrix (row-major). Its weight is the vector of column sums.
using Monomial = std::vector<std::uint8_t>;

// Sparse vector over the p-element field; no zero coefficients stored.
struct ModVector {
    std::map<Monomial, long long> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const ModVector&) const = default;
};

// Shift lambda and mu by c*(1,..,1) with c = max(0, -lambda_n); every
// criterion decision is invariant under the shift, and the shifted pair
// has polynomial lambda as the model construction requires.
BranchingPair shift_to_polynomial(const BranchingPair& pair);

// Number of semistandard tableaux of shape lambda with entries in [1..n].
long long ssyt_count(const Weight& lambda, int n);

// Explicit realization of the costandard module: the span of the
// bideterminants with canonical left tableau inside degree-r matrix
// coordinates, echelonized per weight space over F_p. Immutable once built;
// all actions are pure.
class CostandardModel {
public:
    // Requires lambda_n >= 0. Throws internal_error when the echelonized
    // span misses the semistandard-tableau dimension count.
    static CostandardModel build(const BranchingPair& pair);

    // Same basis, rebound to another interlacing mu.
    CostandardModel with_mu(const Weight& mu) const;

    const BranchingPair& pair() const { return pair_; }
    int n() const { return pair_.n; }
    long long p() const { return pair_.p; }
    long long degree() const { return degree_; }
    long long dimension() const { return static_cast<long long>(basis_.size()); }
    const std::vector<ModVector>& basis() const { return basis_; }

    Weight weight_of(const Monomial& m) const;  // column sums, length n
    // Weight of a homogeneous vector; throws std::invalid_argument if mixed.
    Weight weight_of(const ModVector& v) const;

    ModVector add(const ModVector& a, const ModVector& b) const;
    ModVector scale(long long c, const ModVector& v) const;
    ModVector mul(const ModVector& a, const ModVector& b) const;

    // Divided power E_l^{(m)}: moves m units of column l+1 to column l with
    // exact multinomial coefficients reduced mod p. m = 0 is the identity.
    ModVector act_E(int l, int m, const ModVector& v) const;
    // F_{a,b} (first power): moves one unit of column a to column b.
    ModVector act_F(int a, int b, const ModVector& v) const;
    // F^B_{i,j} = F_{a_0,a_1}...F_{a_k,a_{k+1}} along B+{i,j}; rightmost
    // factor applies first.
    ModVector act_F_chain(int i, int j, const std::vector<int>& B, const ModVector& v) const;

    // Coordinates of v in the echelon basis; throws internal_error if v
    // lies outside the span.
    std::vector<long long> coords(const ModVector& v) const;

    // Dimension of the space of weight-mu vectors killed by every
    // E_l^{(m)}, l <= n-2 (the branching multiplicity: 1 iff mu <- lambda).
    int high_weight_space_dim(const Weight& mu) const;
    // The unique such vector up to scalar, canonically normalized.
    // Throws internal_error when the dimension is not 1.
    ModVector find_f_mu(const Weight& mu) const;

    // S_{i,j}(A) applied to a weight-homogeneous vector f whose GL(n-1)
    // weight prefix is mu_prefix: sum_B H^w_{i,j}(A,B) F^B_{i,j} f.
    ModVector apply_S(int i, int j, const std::vector<int>& A, const ModVector& f,
                      const Weight& mu_prefix) const;

    // Phi(x) f: right-to-left application of each S_{i,j}(A) then the
    // E-word E(k, j-1).
    ModVector apply_phi(const SeqX& x, const ModVector& f) const;

    // Killed by every E_l^{(m)} with l <= n-2, m <= degree.
    bool is_high_weight(const ModVector& v) const;

    // Ground truth for S_{i,j}(A) f_{mu,lambda}.
    Classification classify_lowering(int i, int j, const std::vector<int>& A) const;
    Classification classify_lowering(int i, int j, const std::vector<int>& A,
                                     const ModVector& f_mu) const;

    // Line-oriented snapshots for regression tests.
    void dump_basis(std::ostream& out) const;
    void dump_operator(const std::string& name, int arg1, int arg2, std::ostream& out) const;

private:
    BranchingPair pair_;
    long long degree_ = 0;
    std::vector<std::vector<long long>> pascal_;  // binomials mod p
    std::vector<ModVector> basis_;                // reduced echelon, grouped by weight
    std::map<Monomial, int> pivot_of_;            // leading monomial -> basis index

    CostandardModel() = default;
    long long binom(long long a, long long b) const;
    void echelon_insert(ModVector v);
};

// Per-identity failure report from exercising the operator identities on
// the model.
struct IdentityReport {
    long long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> skipped;

    bool ok() const { return failures.empty(); }
};

// The four commutation cases of E_l^{(m)} past F^A_{i,j}, as operator
// identities on every basis vector.
IdentityReport check_commutation_identities(const CostandardModel& model, int max_m);

// E-word normalization: the a_t-exponent word sends Phi(x) f_{mu,lambda}
// to k_of_seq(x) * f_lambda, over every x in V_n. Unnormalizable pairs
// (f_lambda computing to zero) are reported as skipped.
IdentityReport check_word_scalar_identity(const CostandardModel& model);

// The product formula for E-words against chains F_{d_1,d'_1}...F_{d_r,d'_r},
// r <= max_chains.
IdentityReport check_chain_product_formula(const CostandardModel& model, int max_chains);

// Transition consistency: x -l-> x' implies E_l Phi(x) f = +-Phi(x') f,
// over all transitions of all single-quad sequences.
IdentityReport check_transition_identity(const CostandardModel& model);

// Concatenation split law: Phi(x1 x2) f = 0 iff Phi(x1) f = 0 or
// Phi(x2) f = 0, over two-quad sequences.
IdentityReport check_split_law(const CostandardModel& model);

// All of the above with default bounds.
IdentityReport verify_identities(const CostandardModel& model);

}  // namespace lowop
