#include <CLI11.hpp>

#include "ordwalk/export.hpp"
#include "ordwalk/hwalks.hpp"
#include "ordwalk/norders.hpp"
#include "ordwalk/sampling.hpp"
#include "ordwalk/walks.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

using namespace ordwalk;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Ordinal parse_ord(const std::string& s) {
    auto r = Ordinal::parse(s);
    if (!r) throw UsageError("bad ordinal literal: " + s);
    return *r;
}

OrdTuple parse_tuple(const std::vector<std::string>& parts) {
    OrdTuple t;
    for (const auto& p : parts) t.push_back(parse_ord(p));
    return t;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + out_path);
    f << text;
}

// The sequence domain defaults to w^3, the scale of every documented example;
// it is raised automatically to fit the arguments.
Ordinal fit_domain(const Ordinal& requested, const OrdTuple& args) {
    Ordinal d = requested;
    for (const auto& a : args)
        if (!(a < d)) d = a + Ordinal::nat(1);
    return d;
}

void for_each_node(const WalkNode& node, const std::function<void(const WalkNode&)>& f) {
    f(node);
    for (const auto& k : node.kids) for_each_node(k, f);
}

int run_walk(const std::string& a, const std::string& b, const std::string& cseq,
             const std::string& domain, const std::string& show, bool as_json,
             const std::string& out) {
    Ordinal alpha = parse_ord(a), beta = parse_ord(b);
    auto c = parse_cseq(cseq, fit_domain(parse_ord(domain), {alpha, beta}));
    auto t = upper_trace(*c, alpha, beta);
    long long r2 = static_cast<long long>(t.steps.size()) - 1;
    std::optional<long long> r1;
    try {
        r1 = rho1(*c, alpha, beta);
    } catch (const walk_error&) {
        // infinite step weight (e.g. full clubs); rho1 is omitted
    }
    std::ostringstream o;
    if (as_json) {
        o << walk_json(t, r2, r1) << "\n";
    } else if (show == "trace") {
        o << tuple_str(t.steps) << "\n";
    } else if (show == "lower") {
        o << tuple_str(t.lower) << "\n";
    } else if (show == "rho2") {
        o << r2 << "\n";
    } else if (show == "rho1") {
        if (!r1) throw UsageError("rho1 undefined: some step weight is infinite");
        o << *r1 << "\n";
    } else {
        o << "steps: " << tuple_str(t.steps) << "\n";
        o << "lower: " << tuple_str(t.lower) << "\n";
        o << "rho2: " << r2 << "\n";
        if (r1) o << "rho1: " << *r1 << "\n";
    }
    emit(out, o.str());
    return kOk;
}

int run_hwalk(int n, const std::vector<std::string>& coords, const std::string& cseq,
              const std::string& domain, const std::string& format, const std::string& show,
              const std::string& out) {
    OrdTuple t = parse_tuple(coords);
    if (t.size() != static_cast<std::size_t>(n) + 1)
        throw UsageError("hwalk needs exactly n+1 ordinals");
    if (!is_nondecreasing(t)) throw UsageError("hwalk tuple must be nondecreasing");
    auto c = parse_cseq(cseq, fit_domain(parse_ord(domain), t));
    auto tree = expand_tr(*c, t);
    std::ostringstream o;
    if (!show.empty()) {
        if (show == "outputs" || show == "both") {
            for_each_node(tree.root, [&](const WalkNode& node) {
                if (!node.boundary)
                    o << (node.out_sign > 0 ? "+" : "-") << node.out.str() << "\n";
            });
        }
        if (show == "inputs" || show == "both") {
            for_each_node(tree.root, [&](const WalkNode& node) {
                if (node.boundary)
                    o << (node.in_sign > 0 ? "+" : "-") << tuple_str(node.in) << "\n";
            });
        }
    } else if (format == "json") {
        o << tree_json(tree) << "\n";
    } else if (format == "dot") {
        o << tree_dot(tree);
    } else {
        o << tree_ascii(tree);
    }
    emit(out, o.str());
    return kOk;
}

struct CheckConfig {
    int n = 2;
    Ordinal bound;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    CSeqPtr c;
};

int fail_with(const std::string& prop, const std::string& witness) {
    std::cout << "FAIL " << prop << " counterexample " << witness << "\n";
    return kViolation;
}

int check_finiteness(const CheckConfig& cfg) {
    Sampler s(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        OrdTuple t = s.nondecreasing_tuple(static_cast<std::size_t>(cfg.n) + 1, cfg.bound);
        try {
            expand_tr(*cfg.c, t);
        } catch (const expansion_overflow&) {
            return fail_with("finiteness", tuple_str(t));
        }
    }
    return kOk;
}

// Every node of the walk at (alpha, g) must replicate the walk at (beta, g)
// once beta is replaced by alpha, for alpha in (max L_n, beta].
bool end_extends(const WalkNode& big, const WalkNode& small, const Ordinal& alpha,
                 const Ordinal& beta) {
    OrdTuple expect = big.in;
    if (expect[0] == beta) expect[0] = alpha;
    if (small.in != expect || small.in_sign != big.in_sign) return false;
    if (big.boundary) return true; // the smaller walk may extend past it
    if (small.boundary) return false;
    if (!(small.out == big.out) || small.out_sign != big.out_sign || small.j != big.j)
        return false;
    for (std::size_t k = 0; k < big.kids.size(); ++k)
        if (!end_extends(big.kids[k], small.kids[k], alpha, beta)) return false;
    return true;
}

int check_end_extension(const CheckConfig& cfg) {
    Sampler s(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        OrdTuple g = s.nondecreasing_tuple(static_cast<std::size_t>(cfg.n), cfg.bound);
        Ordinal beta = g[0].is_zero() ? g[0] : s.ordinal_below(g[0] + Ordinal::nat(1));
        if (beta.is_zero()) continue;
        OrdTuple t;
        t.push_back(beta);
        t.insert(t.end(), g.begin(), g.end());
        auto tree = expand_tr(*cfg.c, t);
        Ordinal eta = max_lower(tree);
        if (!(eta < beta)) return fail_with("end-extension", tuple_str(t));
        for (std::size_t k = 0; k < 8; ++k) {
            Ordinal alpha = eta + Ordinal::nat(1 + s.pick(16));
            if (alpha > beta) alpha = beta;
            OrdTuple ta = t;
            ta[0] = alpha;
            auto small = expand_tr(*cfg.c, ta);
            if (!end_extends(tree.root, small.root, alpha, beta))
                return fail_with("end-extension", tuple_str(t) + " alpha " + alpha.str());
        }
    }
    return kOk;
}

int check_pairing(const CheckConfig& cfg) {
    Sampler s(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        OrdTuple g = s.strictly_increasing_tuple(static_cast<std::size_t>(cfg.n) + 1, cfg.bound);
        Ordinal alpha = g[0].is_zero() ? g[0] : s.ordinal_below(g[0] + Ordinal::nat(1));
        try {
            pairing_partition(*cfg.c, alpha, g);
        } catch (const matching_failure& e) {
            return fail_with("pairing", tuple_str(g) + " alpha " + alpha.str() + ": " + e.what());
        }
    }
    return kOk;
}

Ordinal limit_part(const Ordinal& a) {
    Ordinal r;
    for (const auto& [e, c] : a.terms())
        if (!e.is_zero()) r = r + Ordinal::omega_pow(e, c);
    return r;
}

int check_coherence(const CheckConfig& cfg) {
    Sampler s(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        OrdTuple d = s.strictly_increasing_tuple(static_cast<std::size_t>(cfg.n) + 1, cfg.bound);
        Ordinal alpha = limit_part(d[0]);
        if (alpha.is_zero()) continue;
        auto rep = coherence_check(*cfg.c, cfg.n, d, alpha, 12);
        if (!rep.constant)
            return fail_with("coherence", tuple_str(d) + " alpha " + alpha.str());
    }
    return kOk;
}

int check_r2n(const CheckConfig& cfg) {
    Sampler s(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        OrdTuple d = s.strictly_increasing_tuple(static_cast<std::size_t>(cfg.n) + 1, cfg.bound);
        Ordinal beta = d[0];
        if (beta.is_zero()) continue;
        Ordinal eta;
        for (std::size_t j = 0; j < d.size(); ++j) {
            OrdTuple t;
            t.push_back(beta);
            auto face = delete_coord(d, j);
            t.insert(t.end(), face.begin(), face.end());
            Ordinal m = max_lower(expand_tr(*cfg.c, t));
            if (m > eta) eta = m;
        }
        for (int probe = 0; probe < 6; ++probe) {
            Ordinal xi = eta + Ordinal::nat(1 + s.pick(8));
            if (!(xi < beta)) continue;
            FormalSum total;
            for (std::size_t j = 0; j < d.size(); ++j) {
                FormalSum f = r2n_slice(*cfg.c, xi, beta, delete_coord(d, j));
                if (j % 2 == 0)
                    total += f;
                else
                    total -= f;
            }
            if (!total.is_zero())
                return fail_with("r2n", tuple_str(d) + " xi " + xi.str() + " sum " + total.str());
        }
    }
    return kOk;
}

int check_depth_truncation(const CheckConfig& cfg) {
    Sampler s(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        OrdTuple g = s.nondecreasing_tuple(2, cfg.bound);
        Ordinal alpha = g[0].is_zero() ? g[0] : s.ordinal_below(g[0] + Ordinal::nat(1));
        OrdTuple t{alpha, g[0], g[1]};
        OrdTuple t0{Ordinal(), g[0], g[1]};
        auto cut = expand_tr(*cfg.c, t);
        auto full = expand_tr(*cfg.c, t0);
        auto cut_type = rho2t(cut);
        auto full_type = rho2t(full);
        for (const auto& sigma : cut_type) {
            if (!full_type.count(sigma))
                return fail_with("depth-truncation", tuple_str(t) + " sigma '" + sigma + "'");
            const WalkNode* a = cut.find(sigma);
            const WalkNode* b = full.find(sigma);
            if (!(a->out == b->out) || a->out_sign != b->out_sign || a->j != b->j)
                return fail_with("depth-truncation", tuple_str(t) + " sigma '" + sigma + "'");
        }
    }
    return kOk;
}

int run_norder(int n, const std::string& ground_csv, const std::string& rho_name,
               const std::string& cseq, const std::string& domain, bool classify, bool as_json,
               const std::string& out) {
    std::vector<Ordinal> ground;
    std::stringstream ss(ground_csv);
    std::string item;
    while (std::getline(ss, item, ',')) ground.push_back(parse_ord(item));
    if (!is_strictly_increasing(ground))
        throw UsageError("--ground must be strictly increasing");
    if (rho_name != "rho2n") throw UsageError("unknown --rho (supported: rho2n)");
    auto c = parse_cseq(cseq, fit_domain(parse_ord(domain), ground));
    RhoN rho = [&](const Ordinal& xi, const OrdTuple& t) {
        OrdTuple full;
        full.push_back(xi);
        full.insert(full.end(), t.begin(), t.end());
        return rho2n(*c, full);
    };
    auto h = orient_all(rho, ground, n);
    auto witness = classify ? h_witness(h) : std::nullopt;

    std::ostringstream o;
    if (as_json) {
        json doc;
        doc["n"] = n;
        json pts = json::array();
        for (const auto& p : h.points) pts.push_back(p.str());
        doc["ground"] = std::move(pts);
        json bits = json::object();
        for (const auto& [sub, b] : h.bits) {
            std::string key;
            for (auto i : sub) {
                if (!key.empty()) key += ",";
                key += h.points[i].str();
            }
            bits[key] = b;
        }
        doc["bits"] = std::move(bits);
        if (classify) {
            doc["h_free"] = !witness;
            if (witness) {
                json w = json::array();
                for (auto i : *witness) w.push_back(h.points[i].str());
                doc["witness"] = std::move(w);
            }
        }
        o << doc.dump() << "\n";
    } else {
        for (const auto& [sub, b] : h.bits) {
            OrdTuple t;
            for (auto i : sub) t.push_back(h.points[i]);
            o << tuple_str(t) << " " << (b ? "+" : "-") << "\n";
        }
        if (classify) {
            if (witness) {
                OrdTuple t;
                for (auto i : *witness) t.push_back(h.points[i]);
                o << "H witness: " << tuple_str(t) << "\n";
            } else {
                o << "H-free\n";
            }
        }
    }
    emit(out, o.str());
    return (classify && witness) ? kViolation : kOk;
}

int run_enumerate(int vertices, const std::string& out) {
    if (vertices != 4) throw UsageError("only --vertices 4 is supported");
    std::vector<Ordinal> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(Ordinal::nat(static_cast<std::uint64_t>(i)));
    std::map<RestrictionClass, int> labeled;
    std::map<RestrictionClass, std::set<std::vector<bool>>> forms;
    for (unsigned m = 0; m < 16; ++m) {
        Hypertournament h;
        h.arity = 3;
        h.points = pts;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                for (std::size_t cc = b + 1; cc < 4; ++cc) {
                    std::size_t missing = 6 - (a + b + cc);
                    h.bits[{a, b, cc}] = (m >> (3 - missing)) & 1u;
                }
        auto cls = classify_restriction(h, {0, 1, 2, 3});
        labeled[cls]++;
        forms[cls].insert(canonical_form4(h));
    }
    std::ostringstream o;
    o << "labeled: H4=" << labeled[RestrictionClass::H_type] << " C4="
      << labeled[RestrictionClass::C4] << " O4=" << labeled[RestrictionClass::O4] << "\n";
    o << "unlabeled: H4=" << forms[RestrictionClass::H_type].size() << " C4="
      << forms[RestrictionClass::C4].size() << " O4=" << forms[RestrictionClass::O4].size()
      << "\n";
    emit(out, o.str());
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"walks on ordinals and their higher-dimensional generalizations"};
    app.set_version_flag("--version", "ordwalk 1.0.0");
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--output", out_path, "write output to a file instead of stdout");

    // walk
    auto* walk = app.add_subcommand("walk", "classical walk from beta down to alpha");
    std::string w_a, w_b, w_cseq = "canonical", w_domain = "w^3", w_show;
    bool w_json = false;
    walk->add_option("alpha", w_a)->required();
    walk->add_option("beta", w_b)->required();
    walk->add_option("--cseq", w_cseq, "C-sequence selector");
    walk->add_option("--domain", w_domain, "sequence domain (raised to fit the arguments)");
    walk->add_option("--show", w_show)->check(CLI::IsMember({"trace", "lower", "rho1", "rho2"}));
    walk->add_flag("--json", w_json);

    // hwalk
    auto* hwalk = app.add_subcommand("hwalk", "order-n walk expansion");
    int h_n = 2;
    std::vector<std::string> h_coords;
    std::string h_cseq = "canonical", h_domain = "w^3", h_format = "ascii", h_show;
    hwalk->add_option("-n", h_n)->check(CLI::Range(1, 8));
    hwalk->add_option("coords", h_coords, "the n+1 ordinals of the walk")->expected(-1);
    hwalk->add_option("--cseq", h_cseq, "C-sequence selector");
    hwalk->add_option("--domain", h_domain, "sequence domain (raised to fit the arguments)");
    hwalk->add_option("--format", h_format)->check(CLI::IsMember({"ascii", "json", "dot"}));
    hwalk->add_option("--show", h_show)->check(CLI::IsMember({"outputs", "inputs", "both"}));

    // check
    auto* check = app.add_subcommand("check", "seeded property check");
    std::string k_prop, k_bound = "w^2", k_cseq = "canonical";
    int k_n = 2;
    std::size_t k_samples = 100;
    std::uint64_t k_seed = 0;
    check->add_option("property", k_prop)
        ->required()
        ->check(CLI::IsMember(
            {"finiteness", "end-extension", "pairing", "coherence", "r2n", "depth-truncation"}));
    check->add_option("-n", k_n)->check(CLI::Range(1, 4));
    check->add_option("--bound", k_bound, "tuples are sampled below this ordinal");
    check->add_option("--samples", k_samples);
    check->add_option("--seed", k_seed);
    check->add_option("--cseq", k_cseq, "C-sequence selector");

    // norder
    auto* norder = app.add_subcommand("norder", "hypertournament induced by a rho function");
    int o_n = 2;
    std::string o_ground, o_rho = "rho2n", o_cseq = "canonical", o_domain = "w^3";
    bool o_classify = false, o_json = false;
    norder->add_option("-n", o_n)->check(CLI::Range(1, 4));
    norder->add_option("--ground", o_ground, "comma-separated increasing ordinals")->required();
    norder->add_option("--rho", o_rho);
    norder->add_option("--cseq", o_cseq, "C-sequence selector");
    norder->add_option("--domain", o_domain, "sequence domain (raised to fit the arguments)");
    norder->add_flag("--classify", o_classify, "classify all (n+2)-subsets and report H-freeness");
    norder->add_flag("--json", o_json);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "small-case class tallies");
    std::string e_what;
    int e_vertices = 4;
    enumerate->add_option("what", e_what)->required()->check(CLI::IsMember({"h3"}));
    enumerate->add_option("--vertices", e_vertices);

    // ord
    auto* ord = app.add_subcommand("ord", "ordinal arithmetic oracle");
    ord->require_subcommand(1);
    auto* ord_cmp = ord->add_subcommand("cmp", "compare two ordinals");
    std::string c_a, c_b;
    ord_cmp->add_option("a", c_a)->required();
    ord_cmp->add_option("b", c_b)->required();
    auto* ord_add = ord->add_subcommand("add", "ordinal sum");
    std::string s_a, s_b;
    ord_add->add_option("a", s_a)->required();
    ord_add->add_option("b", s_b)->required();
    auto* ord_fund = ord->add_subcommand("fund", "fundamental-sequence element of a limit");
    std::string f_a;
    std::uint64_t f_k = 0;
    ord_fund->add_option("a", f_a)->required();
    ord_fund->add_option("k", f_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*walk) return run_walk(w_a, w_b, w_cseq, w_domain, w_show, w_json, out_path);
        if (*hwalk)
            return run_hwalk(h_n, h_coords, h_cseq, h_domain, h_format, h_show, out_path);
        if (*check) {
            CheckConfig cfg;
            cfg.n = k_n;
            cfg.bound = parse_ord(k_bound);
            cfg.samples = k_samples;
            cfg.seed = k_seed;
            cfg.c = parse_cseq(k_cseq, cfg.bound + Ordinal::nat(1));
            int rc;
            if (k_prop == "finiteness")
                rc = check_finiteness(cfg);
            else if (k_prop == "end-extension")
                rc = check_end_extension(cfg);
            else if (k_prop == "pairing")
                rc = check_pairing(cfg);
            else if (k_prop == "coherence")
                rc = check_coherence(cfg);
            else if (k_prop == "r2n")
                rc = check_r2n(cfg);
            else
                rc = check_depth_truncation(cfg);
            if (rc == kOk)
                std::cout << "OK " << k_prop << " samples " << cfg.samples << " seed " << cfg.seed
                          << "\n";
            return rc;
        }
        if (*norder)
            return run_norder(o_n, o_ground, o_rho, o_cseq, o_domain, o_classify, o_json,
                              out_path);
        if (*enumerate) return run_enumerate(e_vertices, out_path);
        if (*ord_cmp) {
            int c = cmp(parse_ord(c_a), parse_ord(c_b));
            std::cout << (c < 0 ? "less" : (c > 0 ? "greater" : "equal")) << "\n";
            return kOk;
        }
        if (*ord_add) {
            std::cout << (parse_ord(s_a) + parse_ord(s_b)).str() << "\n";
            return kOk;
        }
        if (*ord_fund) {
            Ordinal a = parse_ord(f_a);
            if (a.kind() != Ordinal::Kind::limit) throw UsageError("fund: not a limit ordinal");
            std::cout << a.fundamental(f_k).str() << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
