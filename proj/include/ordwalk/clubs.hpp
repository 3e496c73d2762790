#pragma once

#include "ordwalk/ordinal.hpp"

#include <map>
#include <memory>
#include <stdexcept>

namespace ordwalk {

struct club_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_index : club_error {
    using club_error::club_error;
};
struct coherence_violation : club_error {
    using club_error::club_error;
};

// A closed cofinal subset of an ordinal, exposed through its increasing
// enumeration. Carriers are function-backed and never materialized beyond
// the queried prefix.
class Club {
public:
    virtual ~Club() = default;

    enum class Otp { finite, omega, other };
    virtual Otp otp() const = 0;
    // Carrier size when otp() == finite.
    virtual std::size_t finite_size() const = 0;

    virtual bool is_empty() const = 0;
    // k-th member (0-based); nullopt past the end.
    virtual std::optional<Ordinal> element_at(std::uint64_t k) const = 0;
    // Least member >= x, or nullopt.
    virtual std::optional<Ordinal> min_above(const Ordinal& x) const = 0;
    // Greatest member < x; nullopt when no member is < x, throws when
    // members below x exist but have no maximum.
    virtual std::optional<Ordinal> max_below(const Ordinal& x) const = 0;
    // sup of the members strictly below x, with sup(empty) = 0.
    virtual Ordinal sup_strictly_below(const Ordinal& x) const = 0;
    // |{m in C : m < x}| when finite.
    virtual std::optional<std::uint64_t> count_below(const Ordinal& x) const = 0;

    bool contains(const Ordinal& x) const {
        auto m = min_above(x);
        return m && *m == x;
    }
    virtual std::optional<std::uint64_t> index_of(const Ordinal& x) const;
};

using ClubPtr = std::shared_ptr<const Club>;

ClubPtr make_finite_club(std::vector<Ordinal> members); // strictly increasing
ClubPtr make_ladder_club(const Ordinal& lambda);        // canonical ladder of a limit
ClubPtr make_full_club(const Ordinal& lambda);          // the whole set [0, lambda)

// An order-n C-sequence: a rule assigning a Club to every valid C-index.
// An index (beta) is valid for every beta < domain; (alpha, betas) is valid
// when (betas) is and alpha is a member of its club, up to length order.
class CSequence {
public:
    CSequence(Ordinal domain, int order) : domain_(std::move(domain)), order_(order) {}
    virtual ~CSequence() = default;

    const Ordinal& domain() const { return domain_; }
    int order() const { return order_; }

    bool is_index(const OrdTuple& idx) const;
    const Club& at(const OrdTuple& idx) const { return *at_ptr(idx); }
    ClubPtr at_ptr(const OrdTuple& idx) const; // throws invalid_index

protected:
    virtual ClubPtr resolve(const OrdTuple& idx) const = 0;

private:
    Ordinal domain_;
    int order_;
    mutable std::map<OrdTuple, ClubPtr> cache_;
};

using CSeqPtr = std::shared_ptr<const CSequence>;

// C_beta = [0, beta) at every level: C_{alpha,betas} = alpha intersect C_{betas}
// realized as the full initial segment.
CSeqPtr trivial_sequence(const Ordinal& eps, int n);

// C_{gamma+1} = {gamma}, C_lambda = the canonical ladder, C_0 = {}.
// At higher index lengths the ordertype-minimal rule is forced: the singleton
// {max(alpha intersect C_{betas})}, or {} when that intersection is empty.
CSeqPtr canonical_sequence(const Ordinal& eps, int n = 64);

// C_{alpha,betas} = image under the enumeration of C_{betas} of the club
// resolved at the pulled-back index of natural numbers.
CSeqPtr compound_sequence(CSeqPtr base, int n);

// C_{alpha,betas} = C_alpha when alpha is an accumulation point of C_{betas}
// (the coherence premise C_{betas} intersect alpha = C_alpha is probed and a
// violation raised), else {max(C_{betas} intersect alpha)} or {}.
CSeqPtr square_like_sequence(CSeqPtr base, int n);

// Overrides C_lambda := [0, lambda) and C_{beta,lambda} := C_beta; indices
// ending in lambda of greater length drop the lambda; all others defer to base.
CSeqPtr full_at_sequence(CSeqPtr base, const Ordinal& lambda);

// Selector grammar:
//   trivial | canonical | compound:<n> | square:<n> | full:<ordinal>[,<selector>]
CSeqPtr parse_cseq(std::string_view selector, const Ordinal& domain);

} // namespace ordwalk
