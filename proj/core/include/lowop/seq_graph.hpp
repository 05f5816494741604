#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lowop/weights.hpp"

namespace lowop {

// One factor E(k,j-1) S_{i,j}(A) of an operator word. i < j in general;
// i == k == j with empty A is the trivial factor S_{i,i}() = 1.
struct Quad {
    int i = 1;
    int k = 1;
    int j = 1;
    std::vector<int> A;  // sorted subset of (i..j)

    bool operator==(const Quad&) const = default;
};

// An element of the sequence graph: quads with 1 <= i_1 < j_1 < i_2 < ... <= n.
using SeqX = std::vector<Quad>;

struct Transition {
    int label = 0;  // l with x -l-> target
    int rule = 0;   // 1: lower k, 2: bump i, 3: split at l
    SeqX target;

    bool operator==(const Transition&) const = default;
};

bool validate_seq(const SeqX& x, int n);

// Flat integer encoding, the canonical form used for closure memoization
// and trace output.
std::string encode_seq(const SeqX& x);

// All transitions out of x, generated by ascending quad index then
// ascending label. Throws std::invalid_argument on an invalid sequence.
std::vector<Transition> transitions(const SeqX& x, int n);

// Everything reachable from x (including x itself), in BFS discovery order.
std::vector<SeqX> closure(const SeqX& x, int n);

// As closure(), writing one line per transition traversed:
// parent <TAB> label <TAB> rule <TAB> child (encoded forms).
std::vector<SeqX> closure_traced(const SeqX& x, int n, std::ostream& trace);

// K^{mu,lambda}(x): the product of the evaluated K-scalars of the quads.
ResidueClass k_of_seq(const BranchingPair& pair, const SeqX& x);

// Whether Phi(x) f_{mu,lambda} = 0, decided over the closure: true iff
// k_of_seq vanishes for every sequence following from x.
bool phi_vanishes(const BranchingPair& pair, const SeqX& x);

// Weight of Phi(x) f_{mu,lambda}: mu - sum_t (eps_{i_t} - eps_{k_t}),
// length n-1 with eps_n = 0.
Weight phi_weight(const BranchingPair& pair, const SeqX& x);

// All of V_n (no trivial quads), in lexicographic construction order.
std::vector<SeqX> enumerate_sequences(int n);

}  // namespace lowop
