#pragma once

#include "gmarkov/ints.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gmarkov {

// Positive solution (a,b,c) of the k-generalized Markov equation
//   a^2 + b^2 + c^2 + k(bc + ca + ab) = (3+3k) abc.
struct GMTriple {
    Int a, b, c;

    bool operator==(const GMTriple&) const = default;

    std::string str() const {
        return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
    }
};

enum class TripleTree { TK, MT, MTD };

// Vertex address: tree id, parameter k, and the root-to-vertex path.
// Steps are 'L'/'R'; in TK the first step is '1', '2' or '3'.
struct TreeAddress {
    TripleTree tree;
    Int k;
    std::string path;
};

bool is_gm_triple(const Int& k, const Int& a, const Int& b, const Int& c);
inline bool is_gm_triple(const Int& k, const GMTriple& t) { return is_gm_triple(k, t.a, t.b, t.c); }

// Solution check for the k-generalized second Markov equation
//   x^2 + y^2 + z^2 + (2k+k^2)(x+y+z) + 2k^3 + 3k^2 = xyz.
bool is_gsme_solution(const Int& k, const Int& x, const Int& y, const Int& z);

// Membership test for single values: n appears in some k-GM triple.
// Walks MT(k) pruning at middle entries > n; middles grow doubly
// exponentially, so this terminates quickly.
bool is_gm_number(const Int& k, const Int& n);

// Vieta jumping replacing the selected coordinate (1, 2 or 3) by the conjugate
// root, computed by the linear form (e.g. (3+3k)bc - a - kc - kb).
GMTriple vieta(const Int& k, const GMTriple& t, int which);

// Children in the k-GM tree MT(k), rooted at (1, k+2, 1):
//   left  (a, (a^2+kab+b^2)/c, b),  right (b, (b^2+kbc+c^2)/a, c).
std::pair<GMTriple, GMTriple> mt_children(const Int& k, const GMTriple& t);

// Children in the inverse tree MTD(k), rooted at (1,1,1):
//   left  (a, c, (a^2+kac+c^2)/b),  right ((a^2+kac+c^2)/b, a, c).
std::pair<GMTriple, GMTriple> mtd_children(const Int& k, const GMTriple& t);

// The involution (a,b,c) -> (a, (a^2+kac+c^2)/b, c); carries MT(k) vertices to
// MTD(k) vertices preserving left/right children.
GMTriple mu(const Int& k, const GMTriple& t);

// Children in the full triple tree TK, rooted at (1,1,1). The root has three
// children; every other vertex has two, selected by the maximal coordinate.
std::vector<GMTriple> tk_children(const Int& k, const GMTriple& t);

GMTriple tree_root(TripleTree tree, const Int& k);

// Walks from the root along addr.path.
GMTriple vertex_at(const TreeAddress& addr);

// ((3+3k)a - k, (3+3k)b - k, (3+3k)c - k); solves GSME(k) when (a,b,c) solves GME(k).
std::array<Int, 3> gsme_lift(const Int& k, const GMTriple& t);

// Breadth-first enumeration of all vertices with depth <= depth. Entries grow
// doubly exponentially with depth; the bound is the caller's responsibility.
std::vector<std::pair<TreeAddress, GMTriple>> enumerate_triples(TripleTree tree, const Int& k,
                                                                int depth);

} // namespace gmarkov
