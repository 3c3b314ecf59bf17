#pragma once

#include "gmarkov/contfrac.hpp"
#include "gmarkov/frac.hpp"
#include "gmarkov/presnake.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gmarkov {

// Hirzebruch-Jung expansion of r/a, 0 < a < r, gcd(r,a) = 1, by ceiling
// division; hj_eval inverts it exactly.
HJChain hj_expand(const Int& r, const Int& a);

// Regular-to-HJ conversion: [a1,a2,a3,...] = [[a1+1,(2)^{a2-1},a3+2,...]]
// (even/odd tail handled per the closing term). Requires value > 1.
HJChain cf_to_hj(const RegCF& cf);

// k-Wahl chains grow from [[k+2]] by the moves
//   [[b1,...,bl]] -> [[b1+1,...,bl,2]]  and  [[2,b1,...,bl+1]];
// dual k-Wahl chains grow the same way from [[(2)^{k+1}]]. Recognition is a
// backward search over the two inverse moves, rejecting entries below 2.
bool is_k_wahl(const HJChain& chain, const Int& k);
bool is_dual_k_wahl(const HJChain& chain, const Int& k);

// HJ chains of F+ / G+; values m_t/u+ and m_t/v-.
HJChain f_minus(const Int& k, const Frac& t);
HJChain g_minus(const Int& k, const Frac& t);

// HJ chain of the mediant of a Farey pair, glued as [[G-(k,r), 3k+4, G-(k,s)]];
// r = 0/1 goes through the index-two recursion instead. Equals
// f_minus(k, mediant(r,s)).
HJChain compose(const Int& k, const Frac& r, const Frac& s);

// Cone(e2, r e1 - a e2), the cyclic quotient singularity of type (1/r)(1,a).
struct ConeData {
    Int r, a;

    ConeData(Int rr, Int aa) : r(std::move(rr)), a(std::move(aa)) {
        if (r <= 0 || a <= 0 || a >= r || gcd(r, a) != 1)
            throw std::invalid_argument("ConeData: need 0 < a < r with gcd(r,a) = 1");
    }
};

// Hilbert basis u_0=(0,1), u_1=(1,0), u_{i+1} = b_i u_i - u_{i-1} from the HJ
// chain of r/a; ends at (r,-a), consecutive pairs unimodular. The minimal
// resolution has self-intersection numbers (-b_1, ..., -b_s).
struct HilbertBasis {
    std::vector<std::array<Int, 2>> vectors;
    HJChain chain;
};
HilbertBasis hilbert_basis(const ConeData& cone);

// Full arithmetic report on the k-GM quotient singularity attached to t.
struct SingularityReport {
    Int m;
    CharNumbers cn;
    HJChain chain_u_plus;  // F-(k,t), resolution of (1/m)(1, u+)
    HJChain chain_v_minus; // G-(k,t)
    HJChain chain_u_minus; // generators of the invariant ring
    bool u_plus_is_wahl = false;
    bool u_minus_is_dual_wahl = false;
    HilbertBasis basis;
    // k = 2 only: class-T certificate m = m0^2 with u+ + 1 = a * m0.
    std::optional<Int> class_t_m0;
    std::optional<Int> class_t_a;
};
SingularityReport gm_singularity(const Int& k, const Frac& t);

} // namespace gmarkov
