#include "ordwalk/clubs.hpp"

#include <algorithm>
#include <charconv>

namespace ordwalk {

std::optional<std::uint64_t> Club::index_of(const Ordinal& x) const {
    // Galloping search; requires an enumeration that eventually reaches x.
    auto e0 = element_at(0);
    if (!e0 || *e0 > x) return std::nullopt;
    if (*e0 == x) return 0;
    std::uint64_t lo = 0, hi = 1;
    while (true) {
        auto e = element_at(hi);
        if (!e) { // finite carrier: clamp to the last element
            auto sz = finite_size();
            if (sz == 0) return std::nullopt;
            hi = sz - 1;
            e = element_at(hi);
            if (*e < x) return std::nullopt;
            break;
        }
        if (*e >= x) break;
        lo = hi;
        if (hi > (std::uint64_t(1) << 62)) throw club_error("index_of: unbounded search");
        hi *= 2;
    }
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        auto e = element_at(mid);
        if (e && *e >= x)
            hi = mid;
        else
            lo = mid + 1;
    }
    auto e = element_at(lo);
    if (e && *e == x) return lo;
    return std::nullopt;
}

namespace {

class FiniteClub final : public Club {
public:
    explicit FiniteClub(std::vector<Ordinal> m) : m_(std::move(m)) {}

    Otp otp() const override { return Otp::finite; }
    std::size_t finite_size() const override { return m_.size(); }
    bool is_empty() const override { return m_.empty(); }

    std::optional<Ordinal> element_at(std::uint64_t k) const override {
        if (k >= m_.size()) return std::nullopt;
        return m_[k];
    }
    std::optional<Ordinal> min_above(const Ordinal& x) const override {
        auto it = std::lower_bound(m_.begin(), m_.end(), x);
        if (it == m_.end()) return std::nullopt;
        return *it;
    }
    std::optional<Ordinal> max_below(const Ordinal& x) const override {
        auto it = std::lower_bound(m_.begin(), m_.end(), x);
        if (it == m_.begin()) return std::nullopt;
        return *(it - 1);
    }
    Ordinal sup_strictly_below(const Ordinal& x) const override {
        auto m = max_below(x);
        return m ? *m : Ordinal();
    }
    std::optional<std::uint64_t> count_below(const Ordinal& x) const override {
        return std::lower_bound(m_.begin(), m_.end(), x) - m_.begin();
    }

private:
    std::vector<Ordinal> m_;
};

class LadderClub final : public Club {
public:
    explicit LadderClub(Ordinal lambda) : lambda_(std::move(lambda)) {}

    Otp otp() const override { return Otp::omega; }
    std::size_t finite_size() const override { throw club_error("ladder is infinite"); }
    bool is_empty() const override { return false; }

    std::optional<Ordinal> element_at(std::uint64_t k) const override {
        return lambda_.fundamental(k);
    }
    // Least index k with element_at(k) >= x; requires x < lambda.
    std::uint64_t first_at_or_above(const Ordinal& x) const {
        std::uint64_t lo = 0, hi = 1;
        if (*element_at(0) >= x) return 0;
        while (*element_at(hi) < x) {
            lo = hi;
            if (hi > (std::uint64_t(1) << 62)) throw club_error("ladder search diverged");
            hi *= 2;
        }
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            if (*element_at(mid) >= x)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }
    std::optional<Ordinal> min_above(const Ordinal& x) const override {
        if (x >= lambda_) return std::nullopt;
        return element_at(first_at_or_above(x));
    }
    std::optional<Ordinal> max_below(const Ordinal& x) const override {
        if (x >= lambda_) throw club_error("max_below: no maximum in infinite carrier");
        auto k = first_at_or_above(x);
        if (k == 0) return std::nullopt;
        return element_at(k - 1);
    }
    Ordinal sup_strictly_below(const Ordinal& x) const override {
        if (x >= lambda_) return lambda_;
        auto m = max_below(x);
        return m ? *m : Ordinal();
    }
    std::optional<std::uint64_t> count_below(const Ordinal& x) const override {
        if (x >= lambda_) return std::nullopt;
        return first_at_or_above(x);
    }

private:
    Ordinal lambda_;
};

class FullClub final : public Club {
public:
    explicit FullClub(Ordinal lambda) : lambda_(std::move(lambda)) {}

    Otp otp() const override {
        if (lambda_.is_finite()) return Otp::finite;
        return lambda_ == Ordinal::omega() ? Otp::omega : Otp::other;
    }
    std::size_t finite_size() const override {
        auto n = lambda_.as_nat();
        if (!n) throw club_error("full club is infinite");
        return *n;
    }
    bool is_empty() const override { return lambda_.is_zero(); }

    std::optional<Ordinal> element_at(std::uint64_t k) const override {
        Ordinal v = Ordinal::nat(k);
        if (v >= lambda_) return std::nullopt;
        return v;
    }
    std::optional<Ordinal> min_above(const Ordinal& x) const override {
        if (x >= lambda_) return std::nullopt;
        return x;
    }
    std::optional<Ordinal> max_below(const Ordinal& x) const override {
        const Ordinal& m = x < lambda_ ? x : lambda_;
        switch (m.kind()) {
        case Ordinal::Kind::zero: return std::nullopt;
        case Ordinal::Kind::successor: return m.pred();
        case Ordinal::Kind::limit: throw club_error("max_below: no maximum below a limit");
        }
        return std::nullopt;
    }
    Ordinal sup_strictly_below(const Ordinal& x) const override {
        const Ordinal& m = x < lambda_ ? x : lambda_;
        if (m.kind() == Ordinal::Kind::successor) return m.pred();
        return m; // 0 or a limit: sup [0, m) = m
    }
    std::optional<std::uint64_t> count_below(const Ordinal& x) const override {
        const Ordinal& m = x < lambda_ ? x : lambda_;
        return m.as_nat();
    }
    std::optional<std::uint64_t> index_of(const Ordinal& x) const override {
        if (x >= lambda_) return std::nullopt;
        return x.as_nat(); // infinite members have no representable index
    }

private:
    Ordinal lambda_;
};

} // namespace

ClubPtr make_finite_club(std::vector<Ordinal> members) {
    return std::make_shared<FiniteClub>(std::move(members));
}
ClubPtr make_ladder_club(const Ordinal& lambda) {
    return std::make_shared<LadderClub>(lambda);
}
ClubPtr make_full_club(const Ordinal& lambda) {
    return std::make_shared<FullClub>(lambda);
}

bool CSequence::is_index(const OrdTuple& idx) const {
    if (idx.empty() || idx.size() > static_cast<std::size_t>(order_)) return false;
    if (!(idx.back() < domain_)) return false;
    if (idx.size() == 1) return true;
    OrdTuple tail(idx.begin() + 1, idx.end());
    if (!is_index(tail)) return false;
    return at(tail).contains(idx[0]);
}

ClubPtr CSequence::at_ptr(const OrdTuple& idx) const {
    auto it = cache_.find(idx);
    if (it != cache_.end()) return it->second;
    if (!is_index(idx)) throw invalid_index("not a C-index: " + tuple_str(idx));
    auto club = resolve(idx);
    auto [pos, inserted] = cache_.emplace(idx, std::move(club));
    (void)inserted;
    return pos->second;
}

namespace {

class TrivialSeq final : public CSequence {
public:
    using CSequence::CSequence;

protected:
    ClubPtr resolve(const OrdTuple& idx) const override {
        // alpha intersect [0, beta) = [0, alpha) at every level
        return make_full_club(idx[0]);
    }
};

ClubPtr level_one_canonical(const Ordinal& b) {
    switch (b.kind()) {
    case Ordinal::Kind::zero: return make_finite_club({});
    case Ordinal::Kind::successor: return make_finite_club({b.pred()});
    case Ordinal::Kind::limit: return make_ladder_club(b);
    }
    return make_finite_club({});
}

class CanonicalSeq final : public CSequence {
public:
    using CSequence::CSequence;

protected:
    ClubPtr resolve(const OrdTuple& idx) const override {
        if (idx.size() == 1) return level_one_canonical(idx[0]);
        OrdTuple tail(idx.begin() + 1, idx.end());
        auto m = at(tail).max_below(idx[0]);
        if (!m) return make_finite_club({});
        return make_finite_club({*m});
    }
};

class CompoundSeq final : public CSequence {
public:
    CompoundSeq(CSeqPtr base, int n) : CSequence(base->domain(), n), base_(std::move(base)) {}

protected:
    ClubPtr resolve(const OrdTuple& idx) const override {
        if (idx.size() == 1) return base_->at_ptr(idx);
        const Club& en = at({idx.back()});
        OrdTuple inner;
        for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
            auto k = en.index_of(idx[i]);
            if (!k) throw club_error("compound: no enumeration index for " + idx[i].str());
            inner.push_back(Ordinal::nat(*k));
        }
        const Club& pulled = at(inner);
        std::vector<Ordinal> out;
        for (std::uint64_t j = 0;; ++j) {
            auto e = pulled.element_at(j);
            if (!e) break;
            auto k = e->as_nat();
            if (!k) throw club_error("compound: pulled-back club has infinite member");
            auto img = en.element_at(*k);
            if (!img) throw club_error("compound: image index out of range");
            out.push_back(*img);
        }
        return make_finite_club(std::move(out));
    }

private:
    CSeqPtr base_;
};

class SquareSeq final : public CSequence {
public:
    SquareSeq(CSeqPtr base, int n) : CSequence(base->domain(), n), base_(std::move(base)) {}

protected:
    ClubPtr resolve(const OrdTuple& idx) const override {
        if (idx.size() == 1) return base_->at_ptr(idx);
        OrdTuple tail(idx.begin() + 1, idx.end());
        const Club& s = at(tail);
        const Ordinal& a = idx[0];
        if (!a.is_zero() && s.sup_strictly_below(a) == a) {
            ClubPtr ca = base_->at_ptr({a});
            probe_coherence(s, *ca, a, idx);
            return ca;
        }
        auto m = s.max_below(a);
        if (!m) return make_finite_club({});
        return make_finite_club({*m});
    }

private:
    // Elementwise comparison of bounded prefixes of C_{betas} intersect alpha
    // and C_alpha; exact for every base this module can construct.
    static void probe_coherence(const Club& s, const Club& ca, const Ordinal& a,
                                const OrdTuple& idx) {
        for (std::uint64_t k = 0; k < 32; ++k) {
            auto e1 = s.element_at(k);
            auto e2 = ca.element_at(k);
            bool in1 = e1 && *e1 < a;
            if (in1 != bool(e2) || (in1 && !(*e1 == *e2)))
                throw coherence_violation("square premise fails at " + tuple_str(idx));
            if (!in1) break;
        }
    }

    CSeqPtr base_;
};

class FullAtSeq final : public CSequence {
public:
    FullAtSeq(CSeqPtr base, Ordinal lambda)
        : CSequence(base->domain(), std::max(base->order(), 2)),
          base_(std::move(base)),
          lambda_(std::move(lambda)) {
        if (lambda_.kind() != Ordinal::Kind::limit)
            throw club_error("full_at: lambda must be a limit ordinal");
        if (!(lambda_ < domain()))
            throw club_error("full_at: lambda must lie below the domain");
    }

protected:
    ClubPtr resolve(const OrdTuple& idx) const override {
        if (idx.back() == lambda_) {
            if (idx.size() == 1) return make_full_club(lambda_);
            OrdTuple rest(idx.begin(), idx.end() - 1);
            return base_->at_ptr(rest);
        }
        return base_->at_ptr(idx);
    }

private:
    CSeqPtr base_;
    Ordinal lambda_;
};

} // namespace

CSeqPtr trivial_sequence(const Ordinal& eps, int n) {
    return std::make_shared<TrivialSeq>(eps, n);
}
CSeqPtr canonical_sequence(const Ordinal& eps, int n) {
    return std::make_shared<CanonicalSeq>(eps, n);
}
CSeqPtr compound_sequence(CSeqPtr base, int n) {
    return std::make_shared<CompoundSeq>(std::move(base), n);
}
CSeqPtr square_like_sequence(CSeqPtr base, int n) {
    return std::make_shared<SquareSeq>(std::move(base), n);
}
CSeqPtr full_at_sequence(CSeqPtr base, const Ordinal& lambda) {
    return std::make_shared<FullAtSeq>(std::move(base), lambda);
}

CSeqPtr parse_cseq(std::string_view sel, const Ordinal& domain) {
    auto strip = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    sel = strip(sel);
    constexpr int kDefaultOrder = 64;
    if (sel == "trivial") return trivial_sequence(domain, kDefaultOrder);
    if (sel == "canonical") return canonical_sequence(domain, kDefaultOrder);
    auto tagged = [&](std::string_view tag) -> std::optional<std::string_view> {
        if (sel.substr(0, tag.size()) == tag) return strip(sel.substr(tag.size()));
        return std::nullopt;
    };
    if (auto rest = tagged("compound:")) {
        int n = 0;
        auto [p, ec] = std::from_chars(rest->data(), rest->data() + rest->size(), n);
        if (ec != std::errc() || p != rest->data() + rest->size() || n < 1)
            throw club_error("bad compound order in cseq selector");
        return compound_sequence(canonical_sequence(domain, kDefaultOrder), n);
    }
    if (auto rest = tagged("square:")) {
        int n = 0;
        auto [p, ec] = std::from_chars(rest->data(), rest->data() + rest->size(), n);
        if (ec != std::errc() || p != rest->data() + rest->size() || n < 1)
            throw club_error("bad square order in cseq selector");
        return square_like_sequence(canonical_sequence(domain, kDefaultOrder), n);
    }
    if (auto rest = tagged("full:")) {
        auto comma = rest->find(',');
        auto lit = strip(rest->substr(0, comma));
        auto lambda = Ordinal::parse(lit);
        if (!lambda) throw club_error("bad ordinal literal in full: selector");
        CSeqPtr base = comma == std::string_view::npos
                           ? canonical_sequence(domain, kDefaultOrder)
                           : parse_cseq(rest->substr(comma + 1), domain);
        return full_at_sequence(std::move(base), *lambda);
    }
    throw club_error("unknown cseq selector: " + std::string(sel));
}

} // namespace ordwalk
