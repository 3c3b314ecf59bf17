#include "gmarkov/wahl.hpp"

#include <stdexcept>

namespace gmarkov {

HJChain hj_expand(const Int& r, const Int& a) {
    if (r <= 0 || a <= 0 || a >= r)
        throw std::invalid_argument("hj_expand: need 0 < a < r");
    if (gcd(r, a) != 1)
        throw std::invalid_argument("hj_expand: gcd(r,a) != 1");
    std::vector<Int> terms;
    Int rr = r, aa = a;
    while (aa > 0) {
        Int b;
        mpz_cdiv_q(b.get_mpz_t(), rr.get_mpz_t(), aa.get_mpz_t());
        terms.push_back(b);
        Int next = b * aa - rr;
        rr = aa;
        aa = next;
    }
    return HJChain(std::move(terms));
}

HJChain cf_to_hj(const RegCF& cf) {
    Frac value = cf_eval(cf);
    if (!(value > Frac(1)))
        throw std::invalid_argument("cf_to_hj: value must exceed 1");
    const auto& a = cf.terms;
    std::vector<Int> out;
    if (a.size() == 1) {
        out.push_back(a[0]);
    } else {
        out.push_back(a[0] + 1);
        for (std::size_t i = 1; i < a.size(); ++i) {
            bool even_pos = (i % 2) == 1; // a_2, a_4, ... expand to runs of 2s
            if (even_pos) {
                for (Int c = 1; c < a[i]; ++c) out.push_back(2);
            } else if (i + 1 < a.size()) {
                out.push_back(a[i] + 2);
            } else {
                out.push_back(a[i] + 1); // odd length: closing term
            }
        }
    }
    HJChain chain(std::move(out));
    if (hj_eval(chain) != value)
        throw std::logic_error("cf_to_hj: conversion changed the value");
    return chain;
}

namespace {

// Backward search over the two inverse growth moves:
//   strip a trailing 2 and decrement the head, or
//   strip a leading 2 and decrement the tail.
bool wahl_reachable(std::vector<Int> c, const std::vector<Int>& base) {
    while (c.size() > base.size()) {
        if (c.back() == 2 && c.front() >= 3) {
            c.pop_back();
            c.front() -= 1;
        } else if (c.front() == 2 && c.back() >= 3) {
            c.erase(c.begin());
            c.back() -= 1;
        } else {
            return false;
        }
    }
    return c == base;
}

} // namespace

bool is_k_wahl(const HJChain& chain, const Int& k) {
    return wahl_reachable(chain.terms, {k + 2});
}

bool is_dual_k_wahl(const HJChain& chain, const Int& k) {
    if (!k.fits_slong_p())
        throw std::invalid_argument("is_dual_k_wahl: k too large");
    std::vector<Int> base(static_cast<std::size_t>(k.get_si()) + 1, Int(2));
    return wahl_reachable(chain.terms, base);
}

HJChain f_minus(const Int& k, const Frac& t) { return cf_to_hj(f_plus(k, t)); }

HJChain g_minus(const Int& k, const Frac& t) { return cf_to_hj(g_plus(k, t)); }

HJChain compose(const Int& k, const Frac& r, const Frac& s) {
    Frac t = Frac::mediant(r, s);
    if (Frac::det(r, s) != -1 && Frac::det(r, s) != 1)
        throw std::invalid_argument("compose: (r, s) is not a Farey pair");
    if (r == Frac(0)) {
        // t = 1/(d+1) with s = 1/d; grow from F-(k, 1/(d-1)).
        const Int& d = s.den();
        if (d == 1)
            return f_minus(k, t); // t = 1/2, the recursion base
        std::vector<Int> out{2 * k + 3};
        HJChain prev = f_minus(k, Frac(1, d - 1));
        out.insert(out.end(), prev.terms.begin(), prev.terms.end());
        out.back() += 1;
        for (Int c = 0; c < 2 * k + 1; ++c) out.push_back(2);
        return HJChain(std::move(out));
    }
    HJChain left = g_minus(k, r);
    HJChain right = g_minus(k, s);
    std::vector<Int> out = left.terms;
    out.push_back(3 * k + 4);
    out.insert(out.end(), right.terms.begin(), right.terms.end());
    return HJChain(std::move(out));
}

HilbertBasis hilbert_basis(const ConeData& cone) {
    HilbertBasis hb;
    hb.chain = hj_expand(cone.r, cone.a);
    hb.vectors.push_back({Int(0), Int(1)});
    hb.vectors.push_back({Int(1), Int(0)});
    for (const Int& b : hb.chain.terms) {
        const auto& u = hb.vectors[hb.vectors.size() - 1];
        const auto& w = hb.vectors[hb.vectors.size() - 2];
        hb.vectors.push_back({b * u[0] - w[0], b * u[1] - w[1]});
    }
    const auto& last = hb.vectors.back();
    if (last[0] != cone.r || last[1] != -cone.a)
        throw std::logic_error("hilbert_basis: terminal vector mismatch");
    return hb;
}

SingularityReport gm_singularity(const Int& k, const Frac& t) {
    SingularityReport rep;
    rep.cn = char_numbers(k, t);
    rep.m = rep.cn.m;
    rep.chain_u_plus = hj_expand(rep.m, rep.cn.u_plus);
    rep.chain_v_minus = hj_expand(rep.m, rep.cn.v_minus);
    rep.chain_u_minus = hj_expand(rep.m, rep.cn.u_minus);
    if (rep.chain_u_plus != f_minus(k, t) || rep.chain_v_minus != g_minus(k, t))
        throw std::logic_error("gm_singularity: expansion and sign-sequence routes disagree");
    rep.u_plus_is_wahl = is_k_wahl(rep.chain_u_plus, k);
    rep.u_minus_is_dual_wahl = is_dual_k_wahl(rep.chain_u_minus, k);
    rep.basis = hilbert_basis(ConeData(rep.m, rep.cn.u_plus));
    if (k == 2) {
        Int m0 = isqrt_exact(rep.m);
        rep.class_t_m0 = m0;
        rep.class_t_a = exact_div(rep.cn.u_plus + 1, m0);
    }
    return rep;
}

} // namespace gmarkov
