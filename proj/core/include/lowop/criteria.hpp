#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowop/matching.hpp"
#include "lowop/weights.hpp"

namespace lowop {

enum class Classification {
    Zero,
    NonzeroNotHighWeight,
    NonzeroHighWeight,
};

std::string to_string(Classification c);
std::optional<Classification> classification_from_string(const std::string& s);

// Outcome of classifying S_{i,j}(A) f_{mu,lambda}. A NonzeroHighWeight
// result carries the target weight nu (interlacing lambda) and the
// increasing injection certifying the high-weight property.
struct ClassifyResult {
    Classification cls = Classification::Zero;
    std::optional<Weight> nu;
    std::optional<InjectionWitness> witness_d;

    bool operator==(const ClassifyResult&) const = default;
};

// A good set A together with the decreasing injection it was built from.
struct GoodSetWitness {
    std::vector<int> A;
    InjectionWitness eps;
};

// Maximal runs of consecutive integers, as (b_m, c_m) pairs.
std::vector<std::pair<int, int>> components(const std::vector<int>& M);

// Condition pi_{i,j}(v) for M subset of (i..j): for every admissible k there
// is a weakly increasing injection from {i} and the first v-1 components of
// M into [i..b_v-1) along vanishing b-residues (b_{N+1} = j+1).
bool condition_pi(const BranchingPair& pair, int i, int j, const std::vector<int>& M, int v);

// The variant with k restricted to 1..j-1; requires 1 <= i < j-1 < n-1 and
// M subset of (i..j-1). Again b_{N+1} = j+1.
bool condition_pi_bar(const BranchingPair& pair, int i, int j, const std::vector<int>& M, int v);

// Whether S_{i,j}(A) f_{mu,lambda} = 0: some v in [1..N+1] with
// (i..j)\A satisfying pi(v).
bool lowering_vanishes(const BranchingPair& pair, int i, int j, const std::vector<int>& A);

// Whether E_{j-1} S_{i,j}(A) f_{mu,lambda} = 0; requires 1 <= i < j-1 < n-1
// and j-1 in A.
bool raised_lowering_vanishes(const BranchingPair& pair, int i, int j, const std::vector<int>& A);

// Classify S_{i,n}(A) f_{mu,lambda} (removing one node; nu = mu - eps_i).
ClassifyResult classify_remove_node(const BranchingPair& pair, int i, const std::vector<int>& A);

// Classify S_{i,j}(A) f_{mu,lambda} for 1 <= i < j-1 < n-1 (moving one
// node; nu = mu - eps_i + eps_j).
ClassifyResult classify_move_node(const BranchingPair& pair, int i, int j,
                                  const std::vector<int>& A);

// Classify F_{i,i+1} f_{mu,lambda} = S_{i,i+1}() f_{mu,lambda}, j = i+1 < n.
ClassifyResult classify_adjacent_move(const BranchingPair& pair, int i);

// Dispatcher over the three parameter ranges; A must be a sorted subset of
// (i..j) and 1 <= i < j <= n.
ClassifyResult classify_lowering(const BranchingPair& pair, int i, int j,
                                 const std::vector<int>& A);

// Witness A with classify_remove_node == NonzeroHighWeight, if any.
std::optional<GoodSetWitness> find_good_set_remove(const BranchingPair& pair, int i);

// Witness A with classify (move) == NonzeroHighWeight for j < n, if any;
// routes j = i+1 through the adjacent-move criterion.
std::optional<GoodSetWitness> find_good_set_move(const BranchingPair& pair, int i, int j);

// Dispatcher: j = n removes a node, j < n moves one.
std::optional<GoodSetWitness> find_good_set(const BranchingPair& pair, int i, int j);

// The k-indexed existence route for moving a node (decided by exhausting
// decreasing injections eps and matching theta_k into the k-indexed zero
// sets); equivalent to find_good_set_move != nullopt. Reference path kept
// for cross-checking; requires 1 <= i < j-1 < n-1.
bool good_set_exists_kwise(const BranchingPair& pair, int i, int j);

// Classification of every A subset of (i..j), in subset-mask order
// (element i+1+b <-> bit b).
std::vector<std::pair<std::vector<int>, ClassifyResult>> classify_all_sets(
    const BranchingPair& pair, int i, int j);

}  // namespace lowop
