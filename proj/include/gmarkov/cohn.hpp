#pragma once

#include "gmarkov/markov.hpp"
#include "gmarkov/mat2.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gmarkov {

// Triple of SL(2,Z) matrices; used both for k-GC triples (Q = PR - S) and
// k-MM triples (XYZ = T).
struct MatTriple {
    Mat2 first, second, third;

    bool operator==(const MatTriple&) const = default;

    GMTriple upper_right() const {
        return GMTriple{first.a12, second.a12, third.a12};
    }
    std::array<Int, 3> traces() const {
        return {first.trace(), second.trace(), third.trace()};
    }
};

enum class MatFamily { GC, GCD, MM, MMD };

// S = [[k,0],[3k^2+3k,k]] binds GC triples via Q = PR - S.
Mat2 s_mat(const Int& k);
// T = [[-1,0],[3k+3,-1]] binds MM triples via XYZ = T.
Mat2 t_mat(const Int& k);
// L = [[1,0],[delta,1]]; right conjugation by L moves tree(k,l) to tree(k,l+delta).
Mat2 l_mat(const Int& delta);

// Closed-form matrices attached to the triple (1,1,1):
Mat2 p1_mat(const Int& k, const Int& ell);
Mat2 q1_mat(const Int& k, const Int& ell);
Mat2 r1_mat(const Int& k, const Int& ell);
// and their MM counterparts (psi_inv images at -ell).
Mat2 x1_mat(const Int& k, const Int& ell);
Mat2 y1_mat(const Int& k, const Int& ell);
Mat2 z1_mat(const Int& k, const Int& ell);

// Matrix checks. The GM-number membership test on the (1,2)-entry is a tree
// search, cheap for moderate entries; triple validators below use the exact
// triple equation instead.
bool is_gc_matrix(const Int& k, const Mat2& m, bool check_gm_number = true);
bool is_mm_matrix(const Int& k, const Mat2& m, bool check_gm_number = true);

// Throwing validators: determinants, traces, the binding relation, and the
// GM equation on the (1,2)-entries.
void validate_gc_triple(const Int& k, const MatTriple& t);
void validate_mm_triple(const Int& k, const MatTriple& t);

MatTriple gc_root(const Int& k, const Int& ell);
MatTriple gc_dagger_root(const Int& k, const Int& ell);
MatTriple mm_root(const Int& k, const Int& ell);
MatTriple mm_dagger_root(const Int& k, const Int& ell);

// Tree rules; left child first.
std::pair<MatTriple, MatTriple> gc_children(const Int& k, const MatTriple& t);
std::pair<MatTriple, MatTriple> gc_dagger_children(const Int& k, const MatTriple& t);
std::pair<MatTriple, MatTriple> mm_children(const Int& k, const MatTriple& t);
std::pair<MatTriple, MatTriple> mm_dagger_children(const Int& k, const MatTriple& t);

MatTriple mat_tree_root(MatFamily family, const Int& k, const Int& ell);
std::pair<MatTriple, MatTriple> mat_tree_children(MatFamily family, const Int& k,
                                                  const MatTriple& t);
MatTriple mat_vertex_at(MatFamily family, const Int& k, const Int& ell, const std::string& path);
std::vector<std::pair<std::string, MatTriple>> enumerate_mat_tree(MatFamily family, const Int& k,
                                                                  const Int& ell, int depth);

// Entrywise bijection between k-MM and k-GC matrices and its inverse.
Mat2 psi(const Int& k, const Mat2& m);
Mat2 psi_inv(const Int& k, const Mat2& m);
MatTriple psi_triple(const Int& k, const MatTriple& t);
MatTriple psi_inv_triple(const Int& k, const MatTriple& t);

// Phi(X,Y,Z) = (-(YZ)^{-1}, -(XZ)^{-1}, -(XY)^{-1}); sends MM triples to GC
// triples, carrying the inverse MM tree (k,l) onto the GC tree (k,l) vertexwise.
MatTriple phi_triple(const MatTriple& t);

// Markov-monodromy decomposition of a GC triple, computed as
// psi_inv . phi . psi_inv and sign-normalized to a positive (1,2)-entry of X.
// Satisfies P = -Z^{-1}Y^{-1}, Q = -Z^{-1}X^{-1}, R = -Y^{-1}X^{-1} with equal traces.
MatTriple mm_decompose(const Int& k, const MatTriple& gc);

// k = 2 cross-check of the decomposition: the middle factor is parabolic, so
// it is recovered from its square -P^{-1}QR^{-1} by the half-sum
// Y = +-(Y^2 + I)/2; X and Z follow from the factor identities.
MatTriple mm_decompose_parabolic(const MatTriple& gc);

// Right conjugation of every component by L = [[1,0],[ell2-ell1,1]].
MatTriple conjugate_ell(const MatTriple& t, const Int& ell_from, const Int& ell_to);
Mat2 conjugate_ell(const Mat2& m, const Int& ell_from, const Int& ell_to);

} // namespace gmarkov
