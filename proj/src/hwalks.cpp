#include "ordwalk/hwalks.hpp"

#include "ordwalk/walks.hpp"

#include <sstream>

namespace ordwalk {

std::string FormalSum::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : coeffs_) {
        if (v >= 0 && !first) out << '+';
        out << v << '*' << tuple_str(k);
        first = false;
    }
    return out.str();
}

TailSplit tail_split(const CSequence& c, const OrdTuple& t) {
    std::size_t n = t.size() - 1;
    for (std::size_t len = n; len >= 1; --len) {
        OrdTuple tail(t.end() - static_cast<std::ptrdiff_t>(len), t.end());
        if (c.is_index(tail)) {
            TailSplit s;
            s.tau = std::move(tail);
            s.iota.assign(t.begin(), t.end() - static_cast<std::ptrdiff_t>(len));
            s.j = n - len;
            return s;
        }
    }
    throw invalid_index("tail_split: no valid tail for " + tuple_str(t));
}

namespace {

void expand_node(const CSequence& c, WalkNode& node, const Ordinal& parent_lower, std::size_t n,
                 std::size_t& count, std::size_t max_nodes) {
    if (++count > max_nodes) throw expansion_overflow("walk expansion exceeded node budget");
    auto split = tail_split(c, node.in);
    node.j = split.j;
    const Club& s = c.at(split.tau);
    node.lower = parent_lower;
    if (split.j == 0) {
        Ordinal lv = s.sup_strictly_below(node.in[0]);
        if (lv > node.lower) node.lower = lv;
    }
    auto step = s.min_above(node.in[split.j]);
    if (!step) {
        node.boundary = true;
        return;
    }
    node.out = *step;
    node.out_sign = (split.j % 2 == 0) ? node.in_sign : -node.in_sign;
    // stepped (n+2)-tuple (t[0..j], out, tau)
    OrdTuple u(node.in.begin(), node.in.begin() + static_cast<std::ptrdiff_t>(split.j) + 1);
    u.push_back(node.out);
    u.insert(u.end(), split.tau.begin(), split.tau.end());
    node.kids.reserve(n);
    for (std::size_t i = n + 1; i >= 1; --i) {
        if (i == split.j + 1) continue; // the fresh step is never deleted
        WalkNode child;
        child.in = delete_coord(u, i);
        child.in_sign = ((i + split.j) % 2 == 0) ? node.in_sign : -node.in_sign;
        node.kids.push_back(std::move(child));
    }
    for (auto& k : node.kids) expand_node(c, k, node.lower, n, count, max_nodes);
}

} // namespace

WalkTree expand_tr(const CSequence& c, const OrdTuple& t, int sign, std::size_t max_nodes) {
    if (t.size() < 2) throw walk_error("expand_tr: tuple must have length n+1 >= 2");
    if (!is_nondecreasing(t)) throw walk_error("expand_tr: tuple must be nondecreasing");
    WalkTree tree;
    tree.n = static_cast<int>(t.size()) - 1;
    tree.root.in_sign = sign;
    tree.root.in = t;
    std::size_t count = 0;
    expand_node(c, tree.root, Ordinal(), t.size() - 1, count, max_nodes);
    tree.node_count = count;
    return tree;
}

const WalkNode* WalkTree::find(const std::string& sigma) const {
    const WalkNode* cur = &root;
    for (char ch : sigma) {
        if (cur->boundary) return nullptr;
        std::size_t k = static_cast<std::size_t>(ch - '0');
        if (k >= cur->kids.size()) return nullptr;
        cur = &cur->kids[k];
    }
    return cur;
}

namespace {

template <typename F>
void visit(const WalkNode& node, std::string& sigma, F&& f) {
    f(node, sigma);
    for (std::size_t k = 0; k < node.kids.size(); ++k) {
        sigma.push_back(static_cast<char>('0' + k));
        visit(node.kids[k], sigma, f);
        sigma.pop_back();
    }
}

} // namespace

long long rho2n(const WalkTree& tree) {
    long long charge = 0;
    std::string sigma;
    visit(tree.root, sigma, [&](const WalkNode& n, const std::string&) {
        if (!n.boundary) charge += n.out_sign;
    });
    return charge;
}

long long rho2n(const CSequence& c, const OrdTuple& t) {
    return rho2n(expand_tr(c, t));
}

std::set<std::string> rho2t(const WalkTree& tree) {
    std::set<std::string> out;
    std::string sigma;
    visit(tree.root, sigma, [&](const WalkNode& n, const std::string& s) {
        if (!n.boundary) out.insert(s);
    });
    return out;
}

std::set<std::string> rho2t(const CSequence& c, const OrdTuple& t) {
    return rho2t(expand_tr(c, t));
}

Ordinal lower_trace_n(const CSequence& c, const Ordinal& beta, const OrdTuple& g,
                      const std::string& sigma) {
    OrdTuple t;
    t.push_back(beta);
    t.insert(t.end(), g.begin(), g.end());
    auto tree = expand_tr(c, t);
    const WalkNode* node = tree.find(sigma);
    if (!node || node->boundary) throw walk_error("lower_trace_n: index outside the tree-type");
    return node->lower;
}

Ordinal max_lower(const WalkTree& tree) {
    Ordinal best;
    std::string sigma;
    visit(tree.root, sigma, [&](const WalkNode& n, const std::string&) {
        if (!n.boundary && n.lower > best) best = n.lower;
    });
    return best;
}

FormalSum boundary_sum(const std::vector<SignedTuple>& terms) {
    FormalSum out;
    for (const auto& [sign, t] : terms) {
        if (t.size() < 3) throw walk_error("boundary_sum: needs tuples of length n+1 >= 3");
        OrdTuple g(t.begin() + 1, t.end());
        for (std::size_t i = 0; i < g.size(); ++i)
            out.add(delete_coord(g, i), (i % 2 == 0) ? sign : -sign);
    }
    return out;
}

std::vector<SignedTuple> boundary_inputs(const CSequence& c, int sign, const OrdTuple& t) {
    auto tree = expand_tr(c, t, sign);
    std::vector<SignedTuple> out;
    std::string sigma;
    visit(tree.root, sigma, [&](const WalkNode& n, const std::string&) {
        if (n.boundary) out.emplace_back(n.in_sign, n.in);
    });
    return out;
}

std::vector<std::pair<OrdTuple, std::size_t>> pairing_partition(const CSequence& c,
                                                                const Ordinal& alpha,
                                                                const OrdTuple& g) {
    if (!is_strictly_increasing(g))
        throw walk_error("pairing_partition: tuple must be strictly increasing");
    if (!(alpha <= g[0])) throw walk_error("pairing_partition: alpha must not exceed g[0]");
    std::map<OrdTuple, long long> net;
    std::map<OrdTuple, std::size_t> total;
    for (std::size_t i = 0; i < g.size(); ++i) {
        OrdTuple t;
        t.push_back(alpha);
        auto face = delete_coord(g, i);
        t.insert(t.end(), face.begin(), face.end());
        int sign = (i % 2 == 0) ? 1 : -1;
        for (const auto& [s, in] : boundary_inputs(c, sign, t)) {
            net[in] += s;
            total[in] += 1;
        }
    }
    for (const auto& [k, v] : net)
        if (v != 0)
            throw matching_failure("unbalanced boundary tuple " + tuple_str(k) + " (net " +
                                   std::to_string(v) + ")");
    std::vector<std::pair<OrdTuple, std::size_t>> out;
    for (const auto& [k, v] : total)
        out.emplace_back(k, v / 2);
    return out;
}

FormalSum r2n_slice(const CSequence& c, const Ordinal& xi, const Ordinal& beta,
                    const OrdTuple& g) {
    if (!(xi < beta)) throw walk_error("r2n_slice: need xi < beta");
    OrdTuple t;
    t.push_back(beta);
    t.insert(t.end(), g.begin(), g.end());
    auto tree = expand_tr(c, t);
    FormalSum out;
    std::string sigma;
    visit(tree.root, sigma, [&](const WalkNode& n, const std::string&) {
        if (!n.boundary && n.lower == xi) out.add(n.in, n.in_sign);
    });
    return out;
}

CoherenceReport coherence_check(const CSequence& c, int n, const OrdTuple& d,
                                const Ordinal& alpha, std::size_t samples) {
    if (d.size() != static_cast<std::size_t>(n) + 1 || !is_strictly_increasing(d))
        throw walk_error("coherence_check: d must be strictly increasing of length n+1");
    if (!(alpha <= d[0])) throw walk_error("coherence_check: alpha must not exceed d[0]");
    if (alpha.kind() != Ordinal::Kind::limit)
        throw walk_error("coherence_check: alpha must be a limit ordinal");

    auto fiber_sum = [&](const Ordinal& xi) {
        long long v = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            OrdTuple t;
            t.push_back(xi);
            auto face = delete_coord(d, i);
            t.insert(t.end(), face.begin(), face.end());
            long long r = rho2n(c, t);
            v += (i % 2 == 0) ? r : -r;
        }
        return v;
    };

    CoherenceReport rep;
    for (std::size_t i = 0; i < d.size(); ++i) {
        OrdTuple t;
        t.push_back(alpha);
        auto face = delete_coord(d, i);
        t.insert(t.end(), face.begin(), face.end());
        Ordinal m = max_lower(expand_tr(c, t));
        if (m > rep.eta) rep.eta = m;
    }
    if (!(rep.eta < alpha))
        throw walk_error("coherence_check: max lower trace reaches alpha (club order type too large)");

    rep.value = fiber_sum(alpha);
    rep.constant = true;
    auto ladder = make_ladder_club(alpha);
    std::uint64_t k0 = *ladder->count_below(rep.eta + Ordinal::nat(1));
    for (std::size_t s = 0; s < samples; ++s) {
        Ordinal xi = *ladder->element_at(k0 + samples - 1 - s);
        if (fiber_sum(xi) != rep.value) {
            rep.constant = false;
            break;
        }
    }
    return rep;
}

namespace {

WalkTree order2_tree(const CSequence& c, const Ordinal& alpha, const Ordinal& beta,
                     const Ordinal& gamma) {
    return expand_tr(c, {alpha, beta, gamma});
}

} // namespace

int node_sign(const CSequence& c, const Ordinal& alpha, const Ordinal& beta, const Ordinal& gamma,
              const std::string& sigma) {
    auto tree = order2_tree(c, alpha, beta, gamma);
    const WalkNode* node = tree.find(sigma);
    if (!node || node->boundary) throw walk_error("node_sign: index outside the tree-type");
    return node->out_sign;
}

std::size_t oscillation(const CSequence& c, const Ordinal& alpha, const Ordinal& beta,
                        const Ordinal& gamma, const std::string& sigma) {
    auto tree = order2_tree(c, alpha, beta, gamma);
    const WalkNode* cur = tree.find("");
    if (!cur || cur->boundary) throw walk_error("oscillation: empty tree");
    std::size_t changes = 0;
    int prev = cur->out_sign;
    for (char ch : sigma) {
        std::size_t k = static_cast<std::size_t>(ch - '0');
        if (cur->boundary || k >= cur->kids.size())
            throw walk_error("oscillation: index outside the tree-type");
        cur = &cur->kids[k];
        if (cur->boundary) throw walk_error("oscillation: index outside the tree-type");
        if (cur->out_sign != prev) ++changes;
        prev = cur->out_sign;
    }
    return changes;
}

std::size_t depth(const CSequence& c, const Ordinal& alpha, const Ordinal& beta,
                  const Ordinal& gamma) {
    auto tree = order2_tree(c, alpha, beta, gamma);
    if (tree.root.boundary) return 0;
    std::size_t best = 0;
    // osc accumulates output-sign changes along the branch from the root
    auto walk = [&](auto&& self, const WalkNode& node, std::size_t osc) -> void {
        best = std::max(best, osc);
        for (const auto& kid : node.kids) {
            if (kid.boundary) continue;
            self(self, kid, osc + (kid.out_sign != node.out_sign ? 1 : 0));
        }
    };
    walk(walk, tree.root, 0);
    return best;
}

Recursive2Coherent::Recursive2Coherent(CSeqPtr c, Ordinal bound)
    : c_(std::move(c)), bound_(std::move(bound)) {}

FormalSum Recursive2Coherent::eval(const Ordinal& alpha, const Ordinal& beta,
                                   const Ordinal& xi) const {
    if (!(xi < alpha && alpha < beta && beta <= bound_))
        throw walk_error("recursive family: need xi < alpha < beta <= bound");
    return phi(alpha, beta, xi);
}

FormalSum Recursive2Coherent::phi(const Ordinal& a, const Ordinal& g, const Ordinal& xi) const {
    OrdTuple key{a, g, xi};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    FormalSum out;
    if (g.kind() == Ordinal::Kind::successor) {
        Ordinal p = g.pred();
        if (!(a == p)) out = phi(a, p, xi);
    } else {
        const Club& ladder = c_->at({g});
        if (ladder.otp() != Club::Otp::omega)
            throw walk_error("recursive family: ladder of uncountable type is out of scope");
        if (ladder.contains(a)) {
            auto i = *ladder.index_of(a);
            Ordinal prev = (i == 0) ? Ordinal() : *ladder.element_at(i - 1);
            if (xi < prev) out = phi(prev, g, xi) - phi(prev, a, xi);
        } else {
            Ordinal up = *ladder.min_above(a); // min C_g above a, off the ladder
            out = phi(a, up, xi) + phi(up, g, xi);
        }
    }
    memo_.emplace(std::move(key), out);
    return out;
}

Recursive2Coherent build_recursive_2coherent(CSeqPtr c, const Ordinal& bound) {
    return Recursive2Coherent(std::move(c), bound);
}

} // namespace ordwalk
