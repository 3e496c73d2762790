#include "ordwalk/norders.hpp"

#include <algorithm>

namespace ordwalk {

int perm_sign(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

long long symmetrized(const RhoN& rho, const Ordinal& xi, const OrdTuple& t) {
    int inv = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            int c = cmp(t[i], t[j]);
            if (c == 0) throw norder_error("symmetrized: repeated coordinate");
            if (c > 0) ++inv;
        }
    OrdTuple sorted = t;
    std::sort(sorted.begin(), sorted.end());
    long long v = rho(xi, sorted);
    return inv % 2 == 0 ? v : -v;
}

long long symmetrize(const RhoN& rho, const Ordinal& xi, const Perm& perm, const OrdTuple& t) {
    if (perm.size() != t.size()) throw norder_error("symmetrize: arity mismatch");
    OrdTuple permuted(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) permuted[i] = t[perm[i]];
    return symmetrized(rho, xi, permuted);
}

long long face_sum(const RhoN& rho, const Ordinal& xi, const OrdTuple& g) {
    long long v = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        long long r = rho(xi, delete_coord(g, j));
        v += (j % 2 == 0) ? r : -r;
    }
    return v;
}

std::optional<Ordinal> delta(const RhoN& rho, const std::vector<Ordinal>& ground,
                             const OrdTuple& g) {
    for (const auto& xi : ground) {
        if (!(xi < g[0])) break; // ground is increasing
        if (face_sum(rho, xi, g) != 0) return xi;
    }
    return std::nullopt;
}

bool orient(const RhoN& rho, const std::vector<Ordinal>& ground, const OrdTuple& g) {
    auto d = delta(rho, ground, g);
    if (!d) return true; // the standard ordering holds
    return face_sum(rho, *d, g) > 0;
}

bool Hypertournament::bit(const std::vector<std::size_t>& subset) const {
    auto it = bits.find(subset);
    if (it == bits.end()) throw norder_error("hypertournament: unknown subset");
    return it->second;
}

namespace {

// All increasing k-subsets of {0..m-1}.
void subsets_rec(std::size_t m, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= m; ++i) {
        cur.push_back(i);
        subsets_rec(m, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets_rec(m, k, 0, cur, out);
    return out;
}

} // namespace

Hypertournament orient_all(const RhoN& rho, const std::vector<Ordinal>& ground, int n) {
    if (!is_strictly_increasing(ground)) throw norder_error("ground set must be increasing");
    Hypertournament h;
    h.arity = n + 1;
    h.points = ground;
    for (const auto& sub : subsets(ground.size(), static_cast<std::size_t>(n) + 1)) {
        OrdTuple g;
        for (auto i : sub) g.push_back(ground[i]);
        h.bits[sub] = orient(rho, ground, g);
    }
    return h;
}

RestrictionClass classify_restriction(const Hypertournament& h,
                                      const std::vector<std::size_t>& q) {
    if (q.size() != static_cast<std::size_t>(h.arity) + 1)
        throw norder_error("classify_restriction: subset of wrong size");
    std::vector<bool> face_bits;
    for (std::size_t k = 0; k < q.size(); ++k) {
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (i != k) face.push_back(q[i]);
        face_bits.push_back(h.bit(face));
    }
    bool alternates = true;
    for (std::size_t k = 0; k < face_bits.size(); ++k)
        if (face_bits[k] != (k % 2 == 0 ? face_bits[0] : !face_bits[0])) {
            alternates = false;
            break;
        }
    if (alternates) return RestrictionClass::H_type;
    if (h.arity != 3) return RestrictionClass::non_H;
    Hypertournament sub;
    sub.arity = 3;
    for (auto i : q) sub.points.push_back(h.points[i]);
    for (std::size_t k = 0; k < 4; ++k) {
        // faces in lexicographic subset order: missing element 3-k
        std::vector<std::size_t> local, global;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != 3 - k) {
                local.push_back(i);
                global.push_back(q[i]);
            }
        sub.bits[local] = h.bit(global);
    }
    static const std::vector<bool> c4_ref = [] {
        Hypertournament nat;
        nat.arity = 3;
        nat.points = {Ordinal::nat(0), Ordinal::nat(1), Ordinal::nat(2), Ordinal::nat(3)};
        for (std::size_t k = 0; k < 4; ++k) {
            std::vector<std::size_t> face;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != 3 - k) face.push_back(i);
            nat.bits[face] = true;
        }
        return canonical_form4(nat);
    }();
    return canonical_form4(sub) == c4_ref ? RestrictionClass::C4 : RestrictionClass::O4;
}

std::optional<std::vector<std::size_t>> h_witness(const Hypertournament& h) {
    for (const auto& q : subsets(h.points.size(), static_cast<std::size_t>(h.arity) + 1))
        if (classify_restriction(h, q) == RestrictionClass::H_type) return q;
    return std::nullopt;
}

bool is_H_free(const Hypertournament& h) {
    return !h_witness(h);
}

Hypertournament edge_induced(const std::map<std::pair<int, int>, bool>& edge_up,
                             const std::vector<Ordinal>& points) {
    if (points.size() != 4) throw norder_error("edge_induced: needs exactly 4 points");
    auto up = [&](int i, int j) {
        auto it = edge_up.find({i, j});
        if (it == edge_up.end()) throw norder_error("edge_induced: missing edge");
        return it->second;
    };
    Hypertournament h;
    h.arity = 3;
    h.points = points;
    for (const auto& sub : subsets(4, 3)) {
        int a = static_cast<int>(sub[0]), b = static_cast<int>(sub[1]),
            c = static_cast<int>(sub[2]);
        // votes for the cycle a -> b -> c -> a
        int votes = (up(a, b) ? 1 : 0) + (up(b, c) ? 1 : 0) + (up(a, c) ? 0 : 1);
        h.bits[sub] = votes >= 2;
    }
    return h;
}

std::vector<bool> canonical_form4(const Hypertournament& h) {
    if (h.arity != 3 || h.points.size() != 4) throw norder_error("canonical_form4: needs 4 points");
    auto face_index = [](const std::vector<std::size_t>& f) {
        std::size_t missing = 6 - (f[0] + f[1] + f[2]);
        return 3 - missing;
    };
    std::vector<bool> base(4);
    for (const auto& [f, b] : h.bits) base[face_index(f)] = b;
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::vector<bool> best;
    do {
        std::vector<bool> v(4);
        for (const auto& sub : subsets(4, 3)) {
            std::vector<std::size_t> img{perm[sub[0]], perm[sub[1]], perm[sub[2]]};
            int inv = 0;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j)
                    if (img[i] > img[j]) ++inv;
            std::sort(img.begin(), img.end());
            v[face_index(img)] = base[face_index(sub)] ^ (inv % 2 == 1);
        }
        if (best.empty() || v < best) best = v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace ordwalk
