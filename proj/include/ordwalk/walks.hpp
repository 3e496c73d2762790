#pragma once

#include "ordwalk/clubs.hpp"

#include <functional>

namespace ordwalk {

struct walk_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classical walk from beta down to alpha: steps is the upper trace
// (beta = steps[0] > ... > steps.back() = alpha, each successive step the
// least member of the current club at or above alpha); lower is the running
// maximum of sup(alpha intersect C_step) over the non-final steps.
struct WalkTrace {
    OrdTuple steps;
    OrdTuple lower;
};

WalkTrace upper_trace(const CSequence& c, const Ordinal& alpha, const Ordinal& beta);
long long rho2(const CSequence& c, const Ordinal& alpha, const Ordinal& beta);
// Maximal weight |alpha intersect C_step| over non-final steps.
long long rho1(const CSequence& c, const Ordinal& alpha, const Ordinal& beta);

// True iff max L(beta_probe, gamma) = alpha.
bool r1_slice(const CSequence& c, const Ordinal& alpha, const Ordinal& beta_probe,
              const Ordinal& gamma);
// The edge (beta_probe, min Tr(beta_probe, gamma) minus beta_probe+1) when
// the r1 condition holds.
std::optional<std::pair<Ordinal, Ordinal>> r2_slice(const CSequence& c, const Ordinal& alpha,
                                                    const Ordinal& beta_probe,
                                                    const Ordinal& gamma);

// Walk conducted inside C_gamma via the relativized clubs C_{beta,gamma},
// grounded at min(C_gamma minus alpha); a start outside C_gamma first steps
// up into it.
WalkTrace internal_trace(const CSequence& c, const Ordinal& gamma, const Ordinal& alpha,
                         const Ordinal& beta);
long long rho2_internal(const CSequence& c, const Ordinal& gamma, const Ordinal& alpha,
                        const Ordinal& beta);

// The stagewise recursion: 0 at a predecessor, inherited across successors,
// and max(i, value at the i-th ladder rung) at limits, for the least rung
// above xi. Agrees with rho1(xi+1, beta).
long long recursive_phi(const CSequence& c, const Ordinal& beta, const Ordinal& xi);

// beta before gamma in the fiber-map order over the finite ground set:
// fibers agree on ground points below both, then ordinal order decides;
// otherwise the value at the least disagreement decides.
using FiberFn = std::function<long long(const Ordinal& xi, const Ordinal& beta)>;
bool branch_order(const FiberFn& rho, const std::vector<Ordinal>& ground, const Ordinal& beta,
                  const Ordinal& gamma);

} // namespace ordwalk
