#pragma once

#include "ordwalk/clubs.hpp"
#include "ordwalk/formal_sum.hpp"

#include <set>

namespace ordwalk {

struct expansion_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct matching_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decomposition of an (n+1)-tuple into the longest proper tail that is a
// C-index (tau) and the remaining head (iota); j indexes the last head entry.
struct TailSplit {
    OrdTuple iota;
    OrdTuple tau;
    std::size_t j; // == n - |tau|
};

TailSplit tail_split(const CSequence& c, const OrdTuple& t);

// Node of the n-branching signed walk tree. A non-boundary node carries the
// step ordinal out = min(C_tau minus t[j]) with out_sign = in_sign * (-1)^j,
// and exactly n children; the walk below a boundary node is empty.
struct WalkNode {
    int in_sign = 1;
    OrdTuple in;
    bool boundary = false;
    int out_sign = 1;
    Ordinal out;
    std::size_t j = 0;
    Ordinal lower; // running max of sup(t[0] intersect C_tau) over j == 0 prefixes
    std::vector<WalkNode> kids;
};

struct WalkTree {
    int n = 1;
    WalkNode root;
    std::size_t node_count = 0;

    const WalkNode* find(const std::string& sigma) const;
};

// Full expansion of the order-n walk at the nondecreasing (n+1)-tuple t.
// Children of a node with split position j delete coordinate i of the stepped
// (n+2)-tuple for i in {1..n+1} minus {j+1}, labeled 0..n-1 in decreasing
// order of i, with child sign in_sign * (-1)^(i+j).
WalkTree expand_tr(const CSequence& c, const OrdTuple& t, int sign = 1,
                   std::size_t max_nodes = std::size_t(1) << 22);

// Charge: pluses minus minuses over the outputs.
long long rho2n(const CSequence& c, const OrdTuple& t);
long long rho2n(const WalkTree& tree);

// Tree-type: the prefix-closed set of index strings of non-boundary nodes.
std::set<std::string> rho2t(const CSequence& c, const OrdTuple& t);
std::set<std::string> rho2t(const WalkTree& tree);

// Value of the order-n lower trace of the walk at (beta, g) at index sigma.
Ordinal lower_trace_n(const CSequence& c, const Ordinal& beta, const OrdTuple& g,
                      const std::string& sigma);
// max over the tree-type of the lower trace; 0 for an empty tree.
Ordinal max_lower(const WalkTree& tree);

using SignedTuple = std::pair<int, OrdTuple>;

// Signed face sum over the tuple tails: (sign, (xi, gammas)) contributes
// sign * (-1)^i at each face of gammas.
FormalSum boundary_sum(const std::vector<SignedTuple>& terms);

// Terminal inputs of the expansion, with multiplicity.
std::vector<SignedTuple> boundary_inputs(const CSequence& c, int sign, const OrdTuple& t);

// Combined boundary inputs of the n+1 walks at (alpha, g^i) with alternating
// initial signs, matched into pairs of identical opposite-signed tuples.
// g must be strictly increasing of length n+1 with alpha <= g[0].
// Returns (tuple, pair multiplicity); throws matching_failure if unbalanced.
std::vector<std::pair<OrdTuple, std::size_t>> pairing_partition(const CSequence& c,
                                                                const Ordinal& alpha,
                                                                const OrdTuple& g);

// Signed sum of the inputs of the walk at (beta, g) whose lower-trace value
// is exactly xi.
FormalSum r2n_slice(const CSequence& c, const Ordinal& xi, const Ordinal& beta,
                    const OrdTuple& g);

struct CoherenceReport {
    Ordinal eta;
    bool constant = false;
    long long value = 0;
};

// Fiber-difference constancy below the limit alpha: eta is the max lower
// trace over the n+1 face walks from alpha; samples are drawn descending the
// canonical ladder of alpha within (eta, alpha].
CoherenceReport coherence_check(const CSequence& c, int n, const OrdTuple& d,
                                const Ordinal& alpha, std::size_t samples = 16);

int node_sign(const CSequence& c, const Ordinal& alpha, const Ordinal& beta,
              const Ordinal& gamma, const std::string& sigma);
std::size_t oscillation(const CSequence& c, const Ordinal& alpha, const Ordinal& beta,
                        const Ordinal& gamma, const std::string& sigma);
// Max output-sign changes along any branch of the order-2 walk.
std::size_t depth(const CSequence& c, const Ordinal& alpha, const Ordinal& beta,
                  const Ordinal& gamma);

// The stagewise family phi_{alpha,beta} built over the sequence's ladders:
// zero at a predecessor stage, differenced down ladder rungs at countable
// limits, and spliced through min(C_gamma minus alpha) off the ladder.
class Recursive2Coherent {
public:
    Recursive2Coherent(CSeqPtr c, Ordinal bound);
    // phi_{alpha,beta}(xi); requires xi < alpha < beta <= bound.
    FormalSum eval(const Ordinal& alpha, const Ordinal& beta, const Ordinal& xi) const;

private:
    FormalSum phi(const Ordinal& a, const Ordinal& g, const Ordinal& xi) const;

    CSeqPtr c_;
    Ordinal bound_;
    mutable std::map<OrdTuple, FormalSum> memo_;
};

Recursive2Coherent build_recursive_2coherent(CSeqPtr c, const Ordinal& bound);

} // namespace ordwalk
