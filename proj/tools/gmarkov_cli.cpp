// Command-line front end: tree enumeration, fraction labeling, singularity
// reports, and the cross-verification harness. All integers are emitted as
// decimal strings; output is deterministic for fixed inputs.

#include "gmarkov/cohn.hpp"
#include "gmarkov/contfrac.hpp"
#include "gmarkov/farey.hpp"
#include "gmarkov/markov.hpp"
#include "gmarkov/parabolic.hpp"
#include "gmarkov/presnake.hpp"
#include "gmarkov/snakegraph.hpp"
#include "gmarkov/wahl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>

using namespace gmarkov;
using ojson = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- helpers --

std::string istr(const Int& v) { return v.get_str(); }

ojson frac_json(const Frac& f) { return f.str(); }

ojson mat_json(const Mat2& m) {
    return ojson::array({istr(m.a11), istr(m.a12), istr(m.a21), istr(m.a22)});
}

ojson mat_triple_json(const MatTriple& t) {
    return ojson::array({mat_json(t.first), mat_json(t.second), mat_json(t.third)});
}

ojson gm_triple_json(const GMTriple& t) {
    return ojson::array({istr(t.a), istr(t.b), istr(t.c)});
}

ojson cf_json(const RegCF& cf) {
    ojson terms = ojson::array();
    for (const Int& a : cf.terms) terms.push_back(istr(a));
    ojson j;
    j["terms"] = terms;
    j["value"] = cf_eval(cf).str();
    return j;
}

ojson hj_json(const HJChain& c) {
    ojson terms = ojson::array();
    for (const Int& b : c.terms) terms.push_back(istr(b));
    ojson j;
    j["terms"] = terms;
    j["value"] = hj_eval(c).str();
    return j;
}

ojson pt_json(const PTVertex& v) {
    return ojson::array({ojson::array({istr(v.p), istr(v.pp)}),
                         ojson::array({istr(v.q), istr(v.qp)}),
                         ojson::array({istr(v.r), istr(v.rp)})});
}

Frac parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw CLI::ValidationError("--frac", "expected a/b");
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (num < 0 || den <= 0)
        throw CLI::ValidationError("--frac", "expected a >= 0, b > 0");
    if (gcd(num, den) != 1)
        throw CLI::ValidationError("--frac", s + " is not irreducible");
    return Frac(num, den);
}

void emit(const ojson& j, bool text_mode, const std::string& text) {
    if (text_mode)
        std::cout << text;
    else
        std::cout << j.dump(2) << "\n";
}

// ------------------------------------------------------------------- tree --

int cmd_tree(const std::string& family, long k, long ell, bool ell_given, int depth,
             bool text_mode) {
    ojson j;
    j["command"] = "tree";
    j["family"] = family;
    std::string text;
    auto textline = [&](const std::string& path, const std::string& value) {
        text += (path.empty() ? "." : path) + "  " + value + "\n";
    };

    if (family == "gm" || family == "gm-dagger" || family == "tk") {
        TripleTree tree = family == "gm"          ? TripleTree::MT
                          : family == "gm-dagger" ? TripleTree::MTD
                                                  : TripleTree::TK;
        j["k"] = istr(k);
        j["depth"] = depth;
        auto verts = enumerate_triples(tree, k, depth);
        ojson arr = ojson::array();
        for (const auto& [addr, t] : verts) {
            ojson v;
            v["path"] = addr.path;
            v["triple"] = gm_triple_json(t);
            arr.push_back(v);
            textline(addr.path, t.str());
        }
        j["count"] = verts.size();
        j["vertices"] = arr;
    } else if (family == "gc" || family == "gc-dagger" || family == "mm" ||
               family == "mm-dagger") {
        MatFamily fam = family == "gc"          ? MatFamily::GC
                        : family == "gc-dagger" ? MatFamily::GCD
                        : family == "mm"        ? MatFamily::MM
                                                : MatFamily::MMD;
        j["k"] = istr(k);
        j["ell"] = istr(ell);
        j["depth"] = depth;
        auto verts = enumerate_mat_tree(fam, k, ell, depth);
        ojson arr = ojson::array();
        for (const auto& [path, t] : verts) {
            ojson v;
            v["path"] = path;
            v["matrices"] = mat_triple_json(t);
            v["upper_right"] = gm_triple_json(t.upper_right());
            arr.push_back(v);
            textline(path, t.first.str() + " " + t.second.str() + " " + t.third.str());
        }
        j["count"] = verts.size();
        j["vertices"] = arr;
    } else if (family == "pt" || family == "pt-dagger") {
        if (k != 2)
            throw CLI::ValidationError("--k", "parabolic trees exist for k = 2 only");
        bool dagger = family == "pt-dagger";
        j["k"] = "2";
        j["ell"] = istr(ell);
        j["depth"] = depth;
        auto verts = enumerate_pt_tree(dagger, ell, depth);
        ojson arr = ojson::array();
        for (const auto& [path, v] : verts) {
            ojson o;
            o["path"] = path;
            o["vectors"] = pt_json(v);
            if (!dagger) o["markov"] = gm_triple_json(markov_projection(v));
            arr.push_back(o);
            textline(path, v.str());
        }
        j["count"] = verts.size();
        j["vertices"] = arr;
    } else {
        throw CLI::ValidationError("--family", "unknown family " + family);
    }
    (void)ell_given;
    emit(j, text_mode, text);
    return 0;
}

// ------------------------------------------------------------------ label --

int cmd_label(long k, const Frac& t, long ell, bool ell_given, bool text_mode) {
    if (t.num() > t.den())
        throw CLI::ValidationError("--frac", "label expects a fraction in [0,1]");
    ojson j;
    j["command"] = "label";
    j["k"] = istr(k);
    j["frac"] = frac_json(t);
    j["m"] = istr(m_of(k, t));
    j["f_plus"] = cf_json(f_plus(k, t));
    j["g_plus"] = cf_json(g_plus(k, t));

    bool interior = t != Frac(0) && t != Frac(1);
    if (interior) {
        FareyTriple f = farey_parents(t);
        ojson fp;
        fp["r"] = frac_json(f.r);
        fp["t"] = frac_json(f.t);
        fp["s"] = frac_json(f.s);
        j["farey_parents"] = fp;

        CharNumbers cn = char_numbers(k, t);
        ojson c;
        c["m"] = istr(cn.m);
        c["u_plus"] = istr(cn.u_plus);
        c["u_minus"] = istr(cn.u_minus);
        c["v_plus"] = istr(cn.v_plus);
        c["v_minus"] = istr(cn.v_minus);
        c["w"] = istr(cn.w);
        c["w_prime"] = istr(cn.w_prime);
        j["characteristic"] = c;
    }

    long mm_ell = ell_given ? ell : 0;
    long gc_ell = ell_given ? ell : -k;
    Mat2 mt = labeled_matrix(k, mm_ell, t, LabelFamily::MM);
    Mat2 ct = labeled_matrix(k, gc_ell, t, LabelFamily::GC);
    ojson mats;
    mats["mm_ell"] = istr(mm_ell);
    mats["M_t"] = mat_json(mt);
    mats["gc_ell"] = istr(gc_ell);
    mats["C_t"] = mat_json(ct);
    j["matrices"] = mats;

    ojson ver;
    ver["m_is_gm_number"] = is_gm_number(k, m_of(k, t));
    ver["g_plus_is_reverse"] = g_plus(k, t) == cf_reverse(f_plus(k, t));
    if (!ell_given) {
        ver["mm_matches_matching_counts"] = mt == mm_from_cf(k, t);
        ver["gc_matches_matching_counts"] = ct == gc_from_cf(k, t);
    }
    j["verification"] = ver;

    std::string text;
    text += "m = " + istr(m_of(k, t)) + "\n";
    text += "F+ = " + f_plus(k, t).str() + " = " + cf_eval(f_plus(k, t)).str() + "\n";
    text += "G+ = " + g_plus(k, t).str() + " = " + cf_eval(g_plus(k, t)).str() + "\n";
    if (interior) {
        CharNumbers cn = char_numbers(k, t);
        text += "u+ = " + istr(cn.u_plus) + ", u- = " + istr(cn.u_minus) +
                ", v+ = " + istr(cn.v_plus) + ", v- = " + istr(cn.v_minus) +
                ", w = " + istr(cn.w) + ", w' = " + istr(cn.w_prime) + "\n";
    }
    text += "M_t(" + std::to_string(k) + "," + std::to_string(mm_ell) + ") = " + mt.str() + "\n";
    text += "C_t(" + std::to_string(k) + "," + std::to_string(gc_ell) + ") = " + ct.str() + "\n";
    emit(j, text_mode, text);
    return 0;
}

// ------------------------------------------------------------ singularity --

ojson basis_json(const HilbertBasis& hb) {
    ojson vecs = ojson::array();
    for (const auto& u : hb.vectors) vecs.push_back(ojson::array({istr(u[0]), istr(u[1])}));
    ojson self = ojson::array();
    for (const Int& b : hb.chain.terms) self.push_back(istr(-b));
    ojson j;
    j["vectors"] = vecs;
    j["self_intersections"] = self;
    return j;
}

int cmd_singularity(std::optional<long> k, std::optional<Frac> frac,
                    const std::string& cone_arg, bool text_mode) {
    ojson j;
    j["command"] = "singularity";
    std::string text;

    if (!cone_arg.empty()) {
        auto comma = cone_arg.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--cone", "expected r,a");
        Int r(cone_arg.substr(0, comma));
        Int a(cone_arg.substr(comma + 1));
        ConeData cone(r, a);
        HilbertBasis hb = hilbert_basis(cone);
        j["cone"] = ojson::array({istr(r), istr(a)});
        j["hj"] = hj_json(hb.chain);
        ojson wahl, dual;
        for (long kk = 0; kk <= 3; ++kk) {
            wahl["k" + std::to_string(kk)] = is_k_wahl(hb.chain, kk);
            dual["k" + std::to_string(kk)] = is_dual_k_wahl(hb.chain, kk);
        }
        j["wahl"] = wahl;
        j["dual_wahl"] = dual;
        j["hilbert_basis"] = basis_json(hb);

        text += "type (1/" + istr(r) + ")(1," + istr(a) + ")\n";
        text += "hj = " + hb.chain.str() + "\n";
        text += "wahl(k=0..3):";
        for (long kk = 0; kk <= 3; ++kk)
            text += std::string(" ") + (is_k_wahl(hb.chain, kk) ? "yes" : "no");
        text += "\nbasis:";
        for (const auto& u : hb.vectors) text += " (" + istr(u[0]) + "," + istr(u[1]) + ")";
        text += "\n";
        emit(j, text_mode, text);
        return 0;
    }

    if (!k || !frac)
        throw CLI::ValidationError("singularity", "need --cone or both --k and --frac");
    SingularityReport rep = gm_singularity(*k, *frac);
    j["k"] = istr(*k);
    j["frac"] = frac_json(*frac);
    j["m"] = istr(rep.m);
    ojson c;
    c["u_plus"] = istr(rep.cn.u_plus);
    c["u_minus"] = istr(rep.cn.u_minus);
    c["v_plus"] = istr(rep.cn.v_plus);
    c["v_minus"] = istr(rep.cn.v_minus);
    j["characteristic"] = c;
    j["chain_u_plus"] = hj_json(rep.chain_u_plus);
    j["chain_v_minus"] = hj_json(rep.chain_v_minus);
    j["chain_u_minus"] = hj_json(rep.chain_u_minus);
    j["u_plus_is_wahl"] = rep.u_plus_is_wahl;
    j["u_minus_is_dual_wahl"] = rep.u_minus_is_dual_wahl;
    j["hilbert_basis"] = basis_json(rep.basis);
    if (rep.class_t_m0) {
        ojson ct;
        ct["m0"] = istr(*rep.class_t_m0);
        ct["a"] = istr(*rep.class_t_a);
        ct["holds"] = true;
        j["class_t"] = ct;
    }

    text += "m = " + istr(rep.m) + ", u+ = " + istr(rep.cn.u_plus) + "\n";
    text += "hj(m/u+) = " + rep.chain_u_plus.str() +
            (rep.u_plus_is_wahl ? "  [wahl]" : "  [not wahl]") + "\n";
    text += "hj(m/u-) = " + rep.chain_u_minus.str() +
            (rep.u_minus_is_dual_wahl ? "  [dual wahl]" : "  [not dual wahl]") + "\n";
    if (rep.class_t_m0)
        text += "class T: m = " + istr(*rep.class_t_m0) + "^2, u+ + 1 = " + istr(*rep.class_t_a) +
                " * " + istr(*rep.class_t_m0) + "\n";
    emit(j, text_mode, text);
    return 0;
}

// ----------------------------------------------------------------- verify --

struct Tally {
    std::string tag;
    long pass = 0;
    long fail = 0;
};

class Battery {
public:
    explicit Battery(std::vector<std::string> tags) {
        for (auto& t : tags) tallies_.push_back(Tally{std::move(t), 0, 0});
    }
    void tally(const std::string& tag, bool ok) {
        for (Tally& t : tallies_)
            if (t.tag == tag) {
                ok ? ++t.pass : ++t.fail;
                return;
            }
        throw std::logic_error("unknown tag " + tag);
    }
    void merge(const Battery& o) {
        for (std::size_t i = 0; i < tallies_.size(); ++i) {
            tallies_[i].pass += o.tallies_[i].pass;
            tallies_[i].fail += o.tallies_[i].fail;
        }
    }
    const std::vector<Tally>& tallies() const { return tallies_; }

private:
    std::vector<Tally> tallies_;
};

unsigned worker_count(std::size_t items) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GMARKOV_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    if (items < n) n = items ? static_cast<unsigned>(items) : 1;
    return n;
}

// Runs fn(i, battery) over i = 0..items-1 on a worker pool; per-worker
// batteries are merged in a fixed order, so output stays deterministic.
void run_items(Battery& out, std::size_t items,
               const std::function<void(std::size_t, Battery&)>& fn) {
    unsigned workers = worker_count(items);
    if (workers <= 1) {
        for (std::size_t i = 0; i < items; ++i) fn(i, out);
        return;
    }
    std::vector<Battery> parts(workers, out);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = next.fetch_add(1); i < items; i = next.fetch_add(1))
                fn(i, parts[w]);
        });
    }
    for (auto& th : pool) th.join();
    for (const Battery& p : parts) out.merge(p);
}

std::vector<Frac> proper_fractions(int max_den) {
    std::vector<Frac> out;
    for (int b = 2; b <= max_den; ++b)
        for (int a = 1; a < b; ++a)
            if (gcd(a, b) == 1) out.push_back(Frac(a, b));
    return out;
}

Battery suite_trees(int depth, long k_max) {
    Battery b({"gm-equation", "pairwise-coprime", "middle-maximum", "mu-conjugation",
               "singular-solutions", "gsme-lift"});
    std::vector<std::pair<TripleTree, Int>> items;
    for (long k = 0; k <= k_max; ++k)
        for (auto tr : {TripleTree::TK, TripleTree::MT, TripleTree::MTD})
            items.push_back({tr, Int(k)});
    run_items(b, items.size(), [&](std::size_t i, Battery& out) {
        auto [tree, k] = items[i];
        for (const auto& [addr, t] : enumerate_triples(tree, k, depth)) {
            out.tally("gm-equation", is_gm_triple(k, t));
            out.tally("pairwise-coprime",
                      gcd(t.a, t.b) == 1 && gcd(t.b, t.c) == 1 && gcd(t.a, t.c) == 1);
            if (tree == TripleTree::MT) {
                out.tally("middle-maximum", t.b > t.a && t.b > t.c);
                auto [l, r] = mt_children(k, t);
                auto [dl, dr] = mtd_children(k, mu(k, t));
                out.tally("mu-conjugation", mu(k, l) == dl && mu(k, r) == dr);
            }
            if (tree == TripleTree::MTD)
                out.tally("middle-maximum", t.b <= (t.a > t.c ? t.a : t.c));
            if (t.a == t.b || t.b == t.c || t.a == t.c)
                out.tally("singular-solutions",
                          t == GMTriple{1, 1, 1} || t == GMTriple{k + 2, 1, 1} ||
                              t == GMTriple{1, k + 2, 1} || t == GMTriple{1, 1, k + 2});
            auto lift = gsme_lift(k, t);
            out.tally("gsme-lift", is_gsme_solution(k, lift[0], lift[1], lift[2]));
        }
    });
    return b;
}

Battery suite_psi_phi(int depth, long k_max) {
    Battery b({"psi-address-iso", "psi-dagger-address-iso", "phi-dagger-to-gc",
               "decompose-inverse", "psi-phi-squared", "trace-gsme", "sign-pattern",
               "mobius-order", "distinct-second-entries"});
    std::vector<std::pair<Int, Int>> items;
    for (long k = 0; k <= k_max; ++k)
        for (long l = -2; l <= 2; ++l) items.push_back({Int(k), Int(l)});
    run_items(b, items.size(), [&](std::size_t i, Battery& out) {
        auto [k, l] = items[i];
        auto mm = enumerate_mat_tree(MatFamily::MM, k, l, depth);
        auto gc = enumerate_mat_tree(MatFamily::GC, k, -l, depth);
        auto mmd = enumerate_mat_tree(MatFamily::MMD, k, l, depth);
        auto gcd_tree = enumerate_mat_tree(MatFamily::GCD, k, -l, depth);
        auto gc_same = enumerate_mat_tree(MatFamily::GC, k, l, depth);
        std::set<std::string> second_entries;
        for (std::size_t v = 0; v < mm.size(); ++v) {
            out.tally("psi-address-iso", psi_triple(k, mm[v].second) == gc[v].second);
            out.tally("psi-dagger-address-iso",
                      psi_triple(k, mmd[v].second) == gcd_tree[v].second);
            out.tally("phi-dagger-to-gc", phi_triple(mmd[v].second) == gc_same[v].second);
            MatTriple once = psi_inv_triple(k, phi_triple(mm[v].second));
            out.tally("psi-phi-squared",
                      psi_inv_triple(k, phi_triple(once)) == mm[v].second);
            MatTriple dec = mm_decompose(k, gc_same[v].second);
            out.tally("decompose-inverse",
                      phi_triple(dec) == gc_same[v].second && dec.first.a12 > 0);
            auto tr = gc_same[v].second.traces();
            auto lift = gsme_lift(k, gc_same[v].second.upper_right());
            out.tally("trace-gsme", is_gsme_solution(k, tr[0], tr[1], tr[2]) &&
                                        tr[0] == lift[0] && tr[1] == lift[1] &&
                                        tr[2] == lift[2]);
            const Mat2& y = mm[v].second.second;
            bool signs = y.a21 < 0 && y.a12 > 0;
            if (!mm[v].first.empty()) signs = signs && y.a11 * y.a22 < 0;
            signs = signs && (l >= 1 ? (y.a11 > 0 && y.a22 < 0) : (y.a11 < 0 && y.a22 > 0));
            out.tally("sign-pattern", signs);
            second_entries.insert(gc_same[v].second.second.str());
        }
        out.tally("distinct-second-entries", second_entries.size() == gc_same.size());
        // Moebius image ordering on the left subtree.
        const Frac inf = Frac::infinity();
        std::vector<MatTriple> stack{mat_tree_children(MatFamily::MM, k, mm[0].second).first};
        std::size_t budget = mm.size() / 2 + 1;
        while (!stack.empty() && budget-- > 0) {
            MatTriple t = stack.back();
            stack.pop_back();
            const Mat2 &x = t.first, &y = t.second, &z = t.third;
            bool ok;
            if (l <= 0) {
                Frac zi = mobius_apply(z, inf), yi = mobius_apply(mat_inv(y), inf);
                ok = !zi.is_infinity() && !yi.is_infinity() && zi < yi;
                if (x != x1_mat(k, 0)) {
                    Frac y0 = mobius_apply(y, Frac(0)), xi = mobius_apply(mat_inv(x), Frac(0));
                    ok = ok && !y0.is_infinity() && !xi.is_infinity() && y0 < xi;
                }
            } else {
                Frac z0 = mobius_apply(z, Frac(0)), y0 = mobius_apply(mat_inv(y), Frac(0));
                Frac yi = mobius_apply(y, inf), xi = mobius_apply(mat_inv(x), inf);
                ok = !z0.is_infinity() && !y0.is_infinity() && z0 < y0 && !yi.is_infinity() &&
                     !xi.is_infinity() && yi < xi;
            }
            out.tally("mobius-order", ok);
            if (budget > 0) {
                auto ch = mat_tree_children(MatFamily::MM, k, t);
                stack.push_back(ch.first);
                stack.push_back(ch.second);
            }
        }
    });
    return b;
}

Battery suite_parabolic(int depth) {
    Battery b({"markov-projection", "determinant-triple", "eigenvalue", "fixed-point-match",
               "farey-determinant-bounds", "trichotomy", "distinct-second-components"});
    std::vector<Int> ells{Int(-1), Int(0), Int(1)};
    run_items(b, ells.size(), [&](std::size_t i, Battery& out) {
        const Int& ell = ells[i];
        auto pt = enumerate_pt_tree(false, ell, depth);
        auto mm = enumerate_mat_tree(MatFamily::MM, 2, ell, depth);
        for (std::size_t v = 0; v < pt.size(); ++v) {
            const PTVertex& p = pt[v].second;
            out.tally("markov-projection", is_gm_triple(0, markov_projection(p)));
            auto d = determinant_triple(p);
            GMTriple m = mu(0, markov_projection(p));
            out.tally("determinant-triple",
                      d[0] == 3 * m.a && d[1] == 3 * m.b && d[2] == 3 * m.c);
            const MatTriple& t = mm[v].second;
            bool eig = t.first.a11 * p.p + t.first.a12 * p.pp == -p.p &&
                       t.first.a21 * p.p + t.first.a22 * p.pp == -p.pp &&
                       t.second.a11 * p.q + t.second.a12 * p.qp == -p.q &&
                       t.second.a21 * p.q + t.second.a22 * p.qp == -p.qp &&
                       t.third.a11 * p.r + t.third.a12 * p.rp == -p.r &&
                       t.third.a21 * p.r + t.third.a22 * p.rp == -p.rp;
            out.tally("eigenvalue", eig);
            out.tally("fixed-point-match",
                      fixed_point_triple_of_mm(t).fractions() == p.fractions());
            out.tally("farey-determinant-bounds",
                      p.q * p.pp - p.qp * p.p < -1 && p.q * p.rp - p.qp * p.r > 1 &&
                          p.r * p.pp - p.rp * p.p < -1);
        }
        // Left subtree ordering and distinctness.
        PTVertex lroot = pt_children(pt_root(ell)).first;
        std::vector<PTVertex> level{lroot};
        std::set<std::string> seen;
        std::size_t count = 0;
        for (int d = 0; d < depth; ++d) {
            std::vector<PTVertex> next;
            for (const PTVertex& v : level) {
                Frac fp(v.p, v.pp), fq(v.q, v.qp), fr(v.r, v.rp);
                bool ok;
                if (ell >= 1)
                    ok = fr < fq && fq < fp && fp < Frac(0);
                else if (ell == 0 && v.p != 1)
                    ok = Frac(0) < fr && fr < fq && fq < fp;
                else if (ell == 0)
                    ok = fp < Frac(0) && Frac(0) < fr && fr < fq;
                else
                    ok = Frac(0) < fr && fr < fq && fq < fp;
                out.tally("trichotomy", ok);
                seen.insert(v.q.get_str() + "/" + v.qp.get_str());
                ++count;
                auto [l, r] = pt_children(v);
                next.push_back(l);
                next.push_back(r);
            }
            level = std::move(next);
        }
        out.tally("distinct-second-components", seen.size() == count);
    });
    return b;
}

Battery suite_snake(int max_den, long k_max) {
    Battery b({"geometric-vs-recursive", "farey-gm-triple", "semi-palindrome",
               "g-plus-reversal", "snake-bruteforce", "mm-label-closed-form",
               "gc-label-closed-form", "label-at-tree-address"});
    std::vector<Frac> ts = proper_fractions(max_den);
    ts.push_back(Frac(1, 1));
    run_items(b, ts.size(), [&](std::size_t i, Battery& out) {
        const Frac& t = ts[i];
        for (long kk = 0; kk <= k_max; ++kk) {
            Int k(kk);
            RegCF cf = f_plus(k, t);
            out.tally("geometric-vs-recursive", cf == f_plus_recursive(k, t));
            if (t != Frac(1)) {
                FareyTriple f = farey_parents(t);
                out.tally("farey-gm-triple",
                          is_gm_triple(k, m_of(k, f.r), m_of(k, t), m_of(k, f.s)));
            }
            std::size_t l = cf.size();
            bool semi = l % 2 == 0;
            if (semi) {
                std::size_t h = l / 2;
                for (std::size_t p = 0; p + 1 < h; ++p)
                    semi = semi && cf.terms[p] == cf.terms[l - 1 - p];
                semi = semi && (h % 2 == 0 ? cf.terms[h] == cf.terms[h - 1] + k
                                           : cf.terms[h] == cf.terms[h - 1] - k);
            }
            out.tally("semi-palindrome", semi);
            out.tally("g-plus-reversal", g_plus(k, t) == cf_reverse(cf));
            Int total(0);
            for (const Int& a : cf.terms) total += a;
            if (total - 1 <= 14)
                out.tally("snake-bruteforce",
                          brute_force_matchings(snake_graph_build(cf)) == matching_count(cf));
            Mat2 mt = labeled_matrix(k, 0, t, LabelFamily::MM);
            out.tally("mm-label-closed-form", mt == mm_from_cf(k, t));
            out.tally("gc-label-closed-form",
                      labeled_matrix(k, -k, t, LabelFamily::GC) == gc_from_cf(k, t));
            out.tally("label-at-tree-address", mt.a12 == m_of(k, t));
        }
    });
    return b;
}

Battery suite_charnum(int max_den, long k_max) {
    Battery b({"congruence-vs-denominator", "uv-identities", "cofactor-integrality",
               "reciprocal-values", "ordering-bounds"});
    std::vector<Frac> ts = proper_fractions(max_den);
    run_items(b, ts.size(), [&](std::size_t i, Battery& out) {
        const Frac& t = ts[i];
        for (long kk = 0; kk <= k_max; ++kk) {
            Int k(kk);
            CharNumbers cn;
            try {
                cn = char_numbers(k, t); // throws if the two routes disagree
            } catch (const std::logic_error&) {
                out.tally("congruence-vs-denominator", false);
                continue;
            }
            out.tally("congruence-vs-denominator", true);
            out.tally("uv-identities", cn.u_minus == cn.m - cn.u_plus &&
                                           cn.v_plus == cn.m - cn.u_plus - k &&
                                           cn.v_minus == cn.u_plus + k);
            out.tally("cofactor-integrality", cn.w * cn.m == cn.u_plus * cn.v_minus + 1 &&
                                                  cn.w_prime * cn.m ==
                                                      cn.u_minus * cn.v_plus + 1);
            out.tally("reciprocal-values",
                      cf_eval(f_plus(k, t)) == Frac(cn.m, cn.u_plus) &&
                          cf_eval(g_plus(k, t)) == Frac(cn.m, cn.v_minus) &&
                          cf_eval(f_plus(k, t.reciprocal())) == Frac(cn.m, cn.v_plus) &&
                          cf_eval(g_plus(k, t.reciprocal())) == Frac(cn.m, cn.u_minus));
            out.tally("ordering-bounds", 0 < cn.u_plus && 2 * cn.u_plus < cn.m &&
                                             2 * cn.v_minus < cn.m && 2 * cn.u_minus > cn.m &&
                                             2 * cn.v_plus > cn.m && cn.v_plus < cn.m);
        }
    });
    return b;
}

Battery suite_wahl(int max_den, long k_max) {
    Battery b({"hj-roundtrip", "cf-to-hj-value", "wahl-recognition", "dual-wahl",
               "compose-mediant", "hilbert-basis", "class-t"});
    std::vector<Frac> ts = proper_fractions(max_den);
    run_items(b, ts.size(), [&](std::size_t i, Battery& out) {
        const Frac& t = ts[i];
        for (long kk = 0; kk <= k_max; ++kk) {
            Int k(kk);
            CharNumbers cn = char_numbers(k, t);
            HJChain f = f_minus(k, t);
            out.tally("hj-roundtrip", hj_eval(hj_expand(cn.m, cn.u_plus)) ==
                                          Frac(cn.m, cn.u_plus) &&
                                          hj_expand(cn.m, cn.u_plus) == f);
            out.tally("cf-to-hj-value", hj_eval(f) == cf_eval(f_plus(k, t)));
            out.tally("wahl-recognition", is_k_wahl(f, k));
            out.tally("dual-wahl", is_dual_k_wahl(hj_expand(cn.m, cn.u_minus), k));
            FareyTriple fp = farey_parents(t);
            out.tally("compose-mediant", compose(k, fp.r, fp.s) == f);
            HilbertBasis hb = hilbert_basis(ConeData(cn.m, cn.u_plus));
            bool basis_ok = hb.vectors.size() == hb.chain.size() + 2;
            for (std::size_t v = 0; v + 1 < hb.vectors.size() && basis_ok; ++v) {
                Int det = hb.vectors[v][0] * hb.vectors[v + 1][1] -
                          hb.vectors[v][1] * hb.vectors[v + 1][0];
                basis_ok = det == 1 || det == -1;
            }
            out.tally("hilbert-basis", basis_ok);
            if (k == 2) {
                Int m0 = isqrt_exact(cn.m);
                out.tally("class-t", mod_reduce(cn.u_plus + 1, m0) == 0);
            }
        }
    });
    return b;
}

int cmd_verify(const std::string& suite, int depth, int max_den, long k_max, bool text_mode) {
    std::vector<std::pair<std::string, Battery>> results;
    if (suite == "trees" || suite == "all")
        results.push_back({"trees", suite_trees(depth, k_max)});
    if (suite == "psi-phi" || suite == "all")
        results.push_back({"psi-phi", suite_psi_phi(depth, k_max)});
    if (suite == "parabolic" || suite == "all")
        results.push_back({"parabolic", suite_parabolic(depth)});
    if (suite == "snake" || suite == "all")
        results.push_back({"snake", suite_snake(max_den, k_max)});
    if (suite == "charnum" || suite == "all")
        results.push_back({"charnum", suite_charnum(max_den, k_max)});
    if (suite == "wahl" || suite == "all")
        results.push_back({"wahl", suite_wahl(max_den, k_max)});
    if (results.empty())
        throw CLI::ValidationError("--suite", "unknown suite " + suite);

    long failures = 0;
    ojson j;
    j["command"] = "verify";
    j["suite"] = suite;
    j["depth"] = depth;
    j["max_den"] = max_den;
    j["k_max"] = k_max;
    ojson arr = ojson::array();
    std::string text;
    for (const auto& [name, battery] : results) {
        for (const Tally& t : battery.tallies()) {
            ojson r;
            r["suite"] = name;
            r["tag"] = t.tag;
            r["checked"] = t.pass + t.fail;
            r["failed"] = t.fail;
            r["ok"] = t.fail == 0;
            arr.push_back(r);
            failures += t.fail;
            text += name + "/" + t.tag + ": " + (t.fail == 0 ? "pass" : "FAIL") + " (" +
                    std::to_string(t.pass + t.fail) + " checks)\n";
        }
    }
    j["results"] = arr;
    j["ok"] = failures == 0;
    emit(j, text_mode, text);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for generalized Markov numbers and their trees"};
    app.require_subcommand(1);

    std::string format = "json";

    auto* tree = app.add_subcommand("tree", "enumerate a triple/matrix/fixed-point tree");
    std::string family;
    long tree_k = 0, tree_ell = 0;
    int tree_depth = 0;
    tree->add_option("--family", family,
                     "gm, gm-dagger, tk, gc, gc-dagger, mm, mm-dagger, pt, pt-dagger")
        ->required();
    auto* tree_k_opt = tree->add_option("--k", tree_k, "equation parameter k >= 0");
    auto* tree_ell_opt = tree->add_option("--ell", tree_ell, "tree parameter ell");
    tree->add_option("--depth", tree_depth, "enumeration depth")->required();
    tree->add_option("--format", format, "json or text");

    auto* label = app.add_subcommand("label", "fraction labeling of GM numbers and matrices");
    long label_k = 0, label_ell = 0;
    std::string label_frac;
    label->add_option("--k", label_k, "equation parameter k >= 0")->required();
    label->add_option("--frac", label_frac, "irreducible fraction a/b in [0,1]")->required();
    auto* label_ell_opt = label->add_option("--ell", label_ell, "tree parameter ell");
    label->add_option("--format", format, "json or text");

    auto* sing = app.add_subcommand("singularity", "quotient-singularity data");
    long sing_k = 0;
    std::string sing_frac, sing_cone;
    auto* sing_k_opt = sing->add_option("--k", sing_k, "equation parameter k >= 0");
    auto* sing_frac_opt = sing->add_option("--frac", sing_frac, "irreducible fraction in (0,1)");
    sing->add_option("--cone", sing_cone, "raw cone r,a");
    sing->add_option("--format", format, "json or text");

    auto* verify = app.add_subcommand("verify", "run invariant batteries");
    std::string suite = "all";
    int verify_depth = 5, verify_max_den = 13;
    long verify_k_max = 2;
    verify->add_option("--suite", suite, "trees, psi-phi, parabolic, snake, charnum, wahl, all");
    verify->add_option("--depth", verify_depth, "tree depth bound");
    verify->add_option("--max-den", verify_max_den, "denominator bound");
    verify->add_option("--k-max", verify_k_max, "largest k");
    verify->add_option("--format", format, "json or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        bool text_mode = format == "text";
        if (format != "json" && format != "text") {
            std::cerr << "unknown format " << format << "\n";
            return 2;
        }
        if (tree->parsed()) {
            bool needs_k = family != "pt" && family != "pt-dagger";
            if (needs_k && tree_k_opt->count() == 0) {
                std::cerr << "tree: --k is required for family " << family << "\n";
                return 2;
            }
            if (!needs_k && tree_k_opt->count() == 0) tree_k = 2;
            if (tree_k < 0 || tree_depth < 0) {
                std::cerr << "tree: k and depth must be non-negative\n";
                return 2;
            }
            return cmd_tree(family, tree_k, tree_ell, tree_ell_opt->count() > 0, tree_depth,
                            text_mode);
        }
        if (label->parsed()) {
            if (label_k < 0) {
                std::cerr << "label: k must be non-negative\n";
                return 2;
            }
            return cmd_label(label_k, parse_frac(label_frac), label_ell,
                             label_ell_opt->count() > 0, text_mode);
        }
        if (sing->parsed()) {
            std::optional<long> k;
            std::optional<Frac> t;
            if (sing_k_opt->count()) k = sing_k;
            if (sing_frac_opt->count()) t = parse_frac(sing_frac);
            return cmd_singularity(k, t, sing_cone, text_mode);
        }
        if (verify->parsed())
            return cmd_verify(suite, verify_depth, verify_max_den, verify_k_max, text_mode);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
