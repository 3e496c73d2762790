#include "ordwalk/walks.hpp"

namespace ordwalk {

namespace {
constexpr std::size_t kMaxSteps = 1u << 20;
}

WalkTrace upper_trace(const CSequence& c, const Ordinal& alpha, const Ordinal& beta) {
    if (alpha > beta) throw walk_error("upper_trace: alpha > beta");
    WalkTrace t;
    t.steps.push_back(beta);
    Ordinal b = beta;
    Ordinal running;
    while (!(b == alpha)) {
        const Club& cb = c.at({b});
        auto nxt = cb.min_above(alpha);
        if (!nxt) throw walk_error("upper_trace: club not cofinal at " + b.str());
        Ordinal lv = cb.sup_strictly_below(alpha);
        if (lv > running) running = lv;
        t.lower.push_back(running);
        b = *nxt;
        t.steps.push_back(b);
        if (t.steps.size() > kMaxSteps) throw walk_error("upper_trace: step budget exceeded");
    }
    return t;
}

long long rho2(const CSequence& c, const Ordinal& alpha, const Ordinal& beta) {
    return static_cast<long long>(upper_trace(c, alpha, beta).steps.size()) - 1;
}

long long rho1(const CSequence& c, const Ordinal& alpha, const Ordinal& beta) {
    auto t = upper_trace(c, alpha, beta);
    long long best = 0;
    for (std::size_t i = 0; i + 1 < t.steps.size(); ++i) {
        auto w = c.at({t.steps[i]}).count_below(alpha);
        if (!w) throw walk_error("rho1: infinite weight at step " + t.steps[i].str());
        best = std::max(best, static_cast<long long>(*w));
    }
    return best;
}

bool r1_slice(const CSequence& c, const Ordinal& alpha, const Ordinal& beta_probe,
              const Ordinal& gamma) {
    if (!(alpha < beta_probe && beta_probe < gamma))
        throw walk_error("r1_slice: need alpha < beta_probe < gamma");
    auto t = upper_trace(c, beta_probe, gamma);
    Ordinal max_l = t.lower.empty() ? Ordinal() : t.lower.back();
    return max_l == alpha;
}

std::optional<std::pair<Ordinal, Ordinal>> r2_slice(const CSequence& c, const Ordinal& alpha,
                                                    const Ordinal& beta_probe,
                                                    const Ordinal& gamma) {
    if (!r1_slice(c, alpha, beta_probe, gamma)) return std::nullopt;
    auto t = upper_trace(c, beta_probe, gamma);
    // least trace element >= beta_probe + 1: the second-to-last step
    if (t.steps.size() < 2) return std::nullopt;
    return std::make_pair(beta_probe, t.steps[t.steps.size() - 2]);
}

WalkTrace internal_trace(const CSequence& c, const Ordinal& gamma, const Ordinal& alpha,
                         const Ordinal& beta) {
    if (c.order() < 2) throw walk_error("internal_trace: needs an order-2 sequence");
    if (!(alpha <= beta && beta < gamma))
        throw walk_error("internal_trace: need alpha <= beta < gamma");
    const Club& cg = c.at({gamma});
    auto ground = cg.min_above(alpha);
    if (!ground) throw walk_error("internal_trace: C_gamma has no member above alpha");
    WalkTrace t;
    t.steps.push_back(beta);
    Ordinal b = beta;
    if (!(b == *ground) && !cg.contains(b)) {
        auto up = cg.min_above(b); // first step goes up into C_gamma
        if (!up) throw walk_error("internal_trace: C_gamma has no member above beta");
        t.lower.push_back(cg.sup_strictly_below(alpha));
        b = *up;
        t.steps.push_back(b);
    }
    while (!(b == *ground)) {
        const Club& rel = c.at({b, gamma});
        auto nxt = rel.min_above(alpha);
        if (!nxt) throw walk_error("internal_trace: missing relativized step at " + b.str());
        Ordinal lv = rel.sup_strictly_below(alpha);
        if (!t.lower.empty() && t.lower.back() > lv) lv = t.lower.back();
        t.lower.push_back(lv);
        b = *nxt;
        t.steps.push_back(b);
        if (t.steps.size() > kMaxSteps) throw walk_error("internal_trace: step budget exceeded");
    }
    return t;
}

long long rho2_internal(const CSequence& c, const Ordinal& gamma, const Ordinal& alpha,
                        const Ordinal& beta) {
    return static_cast<long long>(internal_trace(c, gamma, alpha, beta).steps.size()) - 1;
}

long long recursive_phi(const CSequence& c, const Ordinal& beta, const Ordinal& xi) {
    if (!(xi < beta)) throw walk_error("recursive_phi: need xi < beta");
    Ordinal b = beta;
    while (true) {
        if (b.kind() == Ordinal::Kind::successor) {
            Ordinal p = b.pred();
            if (xi == p) return 0;
            b = p; // value inherited from the predecessor stage
            continue;
        }
        const Club& ladder = c.at({b});
        if (ladder.otp() != Club::Otp::omega)
            throw walk_error("recursive_phi: needs ordertype-omega ladders");
        // least rung strictly above xi
        std::uint64_t i = 0;
        {
            auto k = ladder.count_below(xi + Ordinal::nat(1));
            if (!k) throw walk_error("recursive_phi: ladder search failed");
            i = *k;
        }
        Ordinal rung = *ladder.element_at(i);
        long long v = recursive_phi(c, rung, xi);
        return std::max<long long>(static_cast<long long>(i), v);
    }
}

bool branch_order(const FiberFn& rho, const std::vector<Ordinal>& ground, const Ordinal& beta,
                  const Ordinal& gamma) {
    const Ordinal& lo = beta < gamma ? beta : gamma;
    for (const auto& xi : ground) {
        if (!(xi < lo)) continue;
        long long vb = rho(xi, beta);
        long long vg = rho(xi, gamma);
        if (vb != vg) return vb < vg;
    }
    return beta < gamma;
}

} // namespace ordwalk
