#pragma once

#include "gmarkov/cohn.hpp"
#include "gmarkov/contfrac.hpp"
#include "gmarkov/farey.hpp"
#include "gmarkov/frac.hpp"

#include <vector>

namespace gmarkov {

// Sign sequence read off the pre-snake graph of the segment from (0,0) to
// (den, num): one sign per crossed triangle, k signs per crossed edge, in
// crossing order. Signs are +-1. For t = a/b in lowest terms the length is
// 2c + k(2c-1) with c = a + b - 1.
struct SignSeq {
    std::vector<int> signs;
    // Index into signs of the first of the k copies for the central edge
    // (midpoint on the segment); -1 when k = 0.
    long central_index = -1;
};

// Pre-snake sign walk; t irreducible in (0, infinity), t != 0.
// All point classifications are exact integer predicates.
SignSeq presnake_signs(const Int& k, const Frac& t);

// Run-length encoding of a sign sequence; the result starts with the count
// of leading minus signs.
RegCF run_lengths(const std::vector<int>& signs);

// F+(k,t): run lengths of the pre-snake sign sequence; F+(k,0/1) = [] (value 1).
RegCF f_plus(const Int& k, const Frac& t);

// G+(k,t): same with the k central signs flipped; equals the reversal of F+.
RegCF g_plus(const Int& k, const Frac& t);

// F+ computed by the Farey recursion (base [2k+2, k+2] at t = 1/2); agrees
// with the geometric construction.
RegCF f_plus_recursive(const Int& k, const Frac& t);

// Canonical semi-palindrome shape of every F+ output: even length l with
// [a_1..a_h, a_h + k, a_{h-1}..a_1] when h = l/2 is even and the center
// offset -k when h is odd.
bool is_semi_palindrome(const RegCF& cf, const Int& k);

// [a_1..a_l] = F+(k,t) for t in (0,1) maps to F+(k,1/t) =
// [1, a_l - 1, a_{l-1}, ..., a_2, a_1 - 1, 1]. Rejects inputs whose end
// terms would drop below 1.
RegCF reciprocal_transform(const RegCF& cf);

// The k-GM number labeled by t in [0,1]: numerator of F+(k,t).
Int m_of(const Int& k, const Frac& t);

// The four characteristic numbers of t in (0,1) plus the cofactors
// w = (u+ v- + 1)/m and w' = (u- v+ + 1)/m. u+ is computed both as the
// denominator of F+ and from the congruence m_r x = m_s (mod m_t); a
// mismatch between the two routes is an internal error.
struct CharNumbers {
    Int m, u_plus, u_minus, v_plus, v_minus, w, w_prime;
};
CharNumbers char_numbers(const Int& k, const Frac& t);

// Matrix labels from matching counts of prefixes/suffixes of F+(k,t):
//   M_t(k,0)  = [[-K(a_1..a_{l-1}), K(a_1..a_l)], [-K(a_2..a_{l-1}), K(a_2..a_l)]]
//   C_t(k,-k) = [[K(a_2..a_l), K(a_1..a_l)], [...trace/det-determined...]]
// These are the closed-form (oracle) routes; labeled_matrix walks the trees.
Mat2 mm_from_cf(const Int& k, const Frac& t);
Mat2 gc_from_cf(const Int& k, const Frac& t);

enum class LabelFamily { MM, GC };

// Fraction labeling by tree walk: the component of the MM(k,ell) or GC(k,ell)
// tree vertex addressed by the Farey position of t in (0, infinity).
Mat2 labeled_matrix(const Int& k, const Int& ell, const Frac& t, LabelFamily family);

} // namespace gmarkov
