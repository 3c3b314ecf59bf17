#pragma once

#include "gmarkov/cohn.hpp"
#include "gmarkov/frac.hpp"
#include "gmarkov/markov.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gmarkov {

// Vertex of the parabolic fixed point trees: three integer column vectors
// (p,p'), (q,q'), (r,r'). The quotients p/p' etc. are the fixed points of the
// SL(2,Z) components of the matching 2-MM triple; upper entries are classical
// Markov numbers.
struct PTVertex {
    Int p, pp, q, qp, r, rp;

    bool operator==(const PTVertex&) const = default;

    std::array<Frac, 3> fractions() const {
        return {Frac(p, pp), Frac(q, qp), Frac(r, rp)};
    }
    std::string str() const {
        return "((" + p.get_str() + "," + pp.get_str() + "),(" + q.get_str() + "," +
               qp.get_str() + "),(" + r.get_str() + "," + rp.get_str() + "))";
    }
};

// Fixed point of a parabolic matrix with trace -2: sqrt(-a12/a21) with the
// sign decided by a11 vs a22, infinity when a21 = 0. Requires -a12*a21 and
// a12 to be perfect squares; any failure is an error, never a rounding.
Frac fixed_point(const Mat2& m);

PTVertex pt_root(const Int& ell);
PTVertex pt_dagger_root(const Int& ell);
std::pair<PTVertex, PTVertex> pt_children(const PTVertex& v);
std::pair<PTVertex, PTVertex> pt_dagger_children(const PTVertex& v);

PTVertex pt_vertex_at(bool dagger, const Int& ell, const std::string& path);
std::vector<std::pair<std::string, PTVertex>> enumerate_pt_tree(bool dagger, const Int& ell,
                                                                int depth);

// (p,q,r): a classical Markov triple with q > max(p,r) on the plain tree.
GMTriple markov_projection(const PTVertex& v);

// (qr'-q'r, pr'-p'r, pq'-p'q); equals componentwise 3 * mu(0,(p,q,r)).
std::array<Int, 3> determinant_triple(const PTVertex& v);

// Signed fixed points of the components of a 2-MM triple.
PTVertex fixed_point_triple_of_mm(const MatTriple& t);

// (a,b,c) -> (a^2,b^2,c^2) carries 0-GM triples to 2-GM triples; backward
// takes exact square roots and rejects non-squares.
GMTriple square_correspondence_forward(const GMTriple& t);
GMTriple square_correspondence_backward(const GMTriple& t);

} // namespace gmarkov
