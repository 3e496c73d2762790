#pragma once

#include "ordwalk/ordinal.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace ordwalk {

struct norder_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluator of an alternating integer function on strictly increasing
// (n+1)-tuples (xi, betas); xi below betas[0].
using RhoN = std::function<long long(const Ordinal& xi, const OrdTuple& betas)>;

// Permutations are index maps: (perm . t)[i] = t[perm[i]].
using Perm = std::vector<std::size_t>;

int perm_sign(const Perm& p);

// Value of the symmetrized evaluator at an arbitrary distinct tuple:
// sgn of the sorting permutation times the value at the sorted tuple.
long long symmetrized(const RhoN& rho, const Ordinal& xi, const OrdTuple& t);
// Convenience form: evaluate at (perm . t) for strictly increasing t.
long long symmetrize(const RhoN& rho, const Ordinal& xi, const Perm& perm, const OrdTuple& t);

// Alternating face sum at xi: sum over j of (-1)^j rho(xi, g^j).
long long face_sum(const RhoN& rho, const Ordinal& xi, const OrdTuple& g);

// Least ground-set element xi < g[0] where the face sum is nonzero.
std::optional<Ordinal> delta(const RhoN& rho, const std::vector<Ordinal>& ground,
                             const OrdTuple& g);

// Whether the relation holds of g in its increasing order: true when delta is
// undefined, else the sign of the face sum at delta.
bool orient(const RhoN& rho, const std::vector<Ordinal>& ground, const OrdTuple& g);

// One orientation bit per (m = n+1)-subset of the ground set, stored relative
// to the increasing enumeration; relabeling by an odd permutation flips it.
struct Hypertournament {
    int arity = 2;
    std::vector<Ordinal> points;
    std::map<std::vector<std::size_t>, bool> bits; // increasing index subsets

    bool bit(const std::vector<std::size_t>& subset) const;
};

Hypertournament orient_all(const RhoN& rho, const std::vector<Ordinal>& ground, int n);

enum class RestrictionClass { H_type, C4, O4, non_H };

// The (n+2)-subset q (point indices, increasing) is of H-type exactly when
// the orientation bits of its n+2 faces alternate with the face index.
// For arity 3 the non-H cases are refined into C4 and O4.
RestrictionClass classify_restriction(const Hypertournament& h,
                                      const std::vector<std::size_t>& q);

// nullopt when H-free; otherwise an offending (n+2)-subset.
std::optional<std::vector<std::size_t>> h_witness(const Hypertournament& h);
bool is_H_free(const Hypertournament& h);

// Majority rule: each of the 6 directed edges over 4 points votes on the
// cyclic orientation of the faces it bounds. edge_up[{i,j}] (i<j) is true
// when the edge points from i to j.
Hypertournament edge_induced(const std::map<std::pair<int, int>, bool>& edge_up,
                             const std::vector<Ordinal>& points);

// Canonical form of a 4-point 3-hypertournament under relabeling: the
// lexicographically least face-bit vector over Sym(4).
std::vector<bool> canonical_form4(const Hypertournament& h);

} // namespace ordwalk
