#include "gmarkov/cohn.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace gmarkov {

Mat2 s_mat(const Int& k) { return Mat2(k, 0, 3 * k * k + 3 * k, k); }
Mat2 t_mat(const Int& k) { return Mat2(-1, 0, 3 * k + 3, -1); }
Mat2 l_mat(const Int& delta) { return Mat2(1, 0, delta, 1); }

Mat2 p1_mat(const Int& k, const Int& l) {
    return Mat2(l, 1, -l * l + 2 * k * l + 3 * l - 1, -l + 2 * k + 3);
}
Mat2 q1_mat(const Int& k, const Int& l) {
    return Mat2(k + l + 1, 1, k * k - l * l + 3 * k + l + 1, k - l + 2);
}
Mat2 r1_mat(const Int& k, const Int& l) {
    return Mat2(2 * k + l + 2, 1, -l * l - 2 * k * l + 2 * k - l + 1, -l + 1);
}
Mat2 x1_mat(const Int& k, const Int& l) {
    return Mat2(l, 1, -l * l - k * l - 1, -k - l);
}
Mat2 y1_mat(const Int& k, const Int& l) {
    return Mat2(-k + l - 1, 1, -l * l + k * l + 2 * l - k - 2, -l + 1);
}
Mat2 z1_mat(const Int& k, const Int& l) {
    return Mat2(-2 * k + l - 2, 1, -2 * k * k - l * l + 3 * k * l - 6 * k + 4 * l - 5,
                k - l + 2);
}

bool is_gc_matrix(const Int& k, const Mat2& m, bool check_gm_number) {
    if (m.det() != 1) return false;
    if (m.trace() != (3 * k + 3) * m.a12 - k) return false;
    return !check_gm_number || is_gm_number(k, m.a12);
}

bool is_mm_matrix(const Int& k, const Mat2& m, bool check_gm_number) {
    if (m.det() != 1) return false;
    if (m.trace() != -k) return false;
    return !check_gm_number || is_gm_number(k, m.a12);
}

void validate_gc_triple(const Int& k, const MatTriple& t) {
    for (const Mat2* m : {&t.first, &t.second, &t.third}) {
        if (m->det() != 1)
            throw std::invalid_argument("GC triple: det != 1 in " + m->str());
        if (m->trace() != (3 * k + 3) * m->a12 - k)
            throw std::invalid_argument("GC triple: trace mismatch in " + m->str());
    }
    if (t.second != t.first * t.third - s_mat(k))
        throw std::invalid_argument("GC triple: Q != PR - S");
    GMTriple g = t.upper_right();
    if (!is_gm_triple(k, g))
        throw std::invalid_argument("GC triple: (1,2)-entries " + g.str() + " not a GM triple");
}

void validate_mm_triple(const Int& k, const MatTriple& t) {
    for (const Mat2* m : {&t.first, &t.second, &t.third}) {
        if (m->det() != 1)
            throw std::invalid_argument("MM triple: det != 1 in " + m->str());
        if (m->trace() != -k)
            throw std::invalid_argument("MM triple: trace != -k in " + m->str());
    }
    if (t.first * t.second * t.third != t_mat(k))
        throw std::invalid_argument("MM triple: XYZ != T");
    GMTriple g = t.upper_right();
    if (!is_gm_triple(k, g))
        throw std::invalid_argument("MM triple: (1,2)-entries " + g.str() + " not a GM triple");
}

namespace {

#ifndef NDEBUG
bool valid_triple(MatFamily family, const Int& k, const MatTriple& t) {
    try {
        if (family == MatFamily::GC || family == MatFamily::GCD)
            validate_gc_triple(k, t);
        else
            validate_mm_triple(k, t);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}
#endif

} // namespace

MatTriple gc_root(const Int& k, const Int& l) {
    Mat2 p = p1_mat(k, l), q = q1_mat(k, l);
    return MatTriple{p, p * q - s_mat(k), q};
}

MatTriple gc_dagger_root(const Int& k, const Int& l) {
    return MatTriple{p1_mat(k, l), q1_mat(k, l), r1_mat(k, l)};
}

MatTriple mm_root(const Int& k, const Int& l) {
    Mat2 y = y1_mat(k, l), z = z1_mat(k, l);
    return MatTriple{x1_mat(k, l), y * z * mat_inv(y), y};
}

MatTriple mm_dagger_root(const Int& k, const Int& l) {
    return MatTriple{x1_mat(k, l), y1_mat(k, l), z1_mat(k, l)};
}

std::pair<MatTriple, MatTriple> gc_children(const Int& k, const MatTriple& t) {
    Mat2 s = s_mat(k);
    return {MatTriple{t.first, t.first * t.second - s, t.second},
            MatTriple{t.second, t.second * t.third - s, t.third}};
}

std::pair<MatTriple, MatTriple> gc_dagger_children(const Int& k, const MatTriple& t) {
    Mat2 s = s_mat(k);
    return {MatTriple{t.first, t.third, mat_inv(t.first) * (t.third + s)},
            MatTriple{(t.first + s) * mat_inv(t.third), t.first, t.third}};
}

std::pair<MatTriple, MatTriple> mm_children(const Int&, const MatTriple& t) {
    return {MatTriple{t.first, t.second * t.third * mat_inv(t.second), t.second},
            MatTriple{t.second, mat_inv(t.second) * t.first * t.second, t.third}};
}

std::pair<MatTriple, MatTriple> mm_dagger_children(const Int&, const MatTriple& t) {
    return {MatTriple{t.first, t.third, mat_inv(t.third) * t.second * t.third},
            MatTriple{t.first * t.second * mat_inv(t.first), t.first, t.third}};
}

MatTriple mat_tree_root(MatFamily family, const Int& k, const Int& l) {
    switch (family) {
    case MatFamily::GC: return gc_root(k, l);
    case MatFamily::GCD: return gc_dagger_root(k, l);
    case MatFamily::MM: return mm_root(k, l);
    case MatFamily::MMD: return mm_dagger_root(k, l);
    }
    throw std::logic_error("mat_tree_root: bad family");
}

std::pair<MatTriple, MatTriple> mat_tree_children(MatFamily family, const Int& k,
                                                  const MatTriple& t) {
    std::pair<MatTriple, MatTriple> ch;
    switch (family) {
    case MatFamily::GC: ch = gc_children(k, t); break;
    case MatFamily::GCD: ch = gc_dagger_children(k, t); break;
    case MatFamily::MM: ch = mm_children(k, t); break;
    case MatFamily::MMD: ch = mm_dagger_children(k, t); break;
    }
    assert(valid_triple(family, k, ch.first) && valid_triple(family, k, ch.second));
    return ch;
}

MatTriple mat_vertex_at(MatFamily family, const Int& k, const Int& l, const std::string& path) {
    MatTriple t = mat_tree_root(family, k, l);
    for (char step : path) {
        auto ch = mat_tree_children(family, k, t);
        if (step == 'L')
            t = ch.first;
        else if (step == 'R')
            t = ch.second;
        else
            throw std::invalid_argument("mat_vertex_at: step must be L or R");
    }
    return t;
}

std::vector<std::pair<std::string, MatTriple>> enumerate_mat_tree(MatFamily family, const Int& k,
                                                                  const Int& l, int depth) {
    if (depth < 0)
        throw std::invalid_argument("enumerate_mat_tree: negative depth");
    std::vector<std::pair<std::string, MatTriple>> out;
    std::deque<std::pair<std::string, MatTriple>> queue;
    queue.push_back({"", mat_tree_root(family, k, l)});
    while (!queue.empty()) {
        auto [path, t] = queue.front();
        queue.pop_front();
        out.push_back({path, t});
        if (static_cast<int>(path.size()) >= depth) continue;
        auto ch = mat_tree_children(family, k, t);
        queue.push_back({path + "L", ch.first});
        queue.push_back({path + "R", ch.second});
    }
    return out;
}

Mat2 psi(const Int& k, const Mat2& m) {
    return Mat2(-m.a11 + m.a12 * k - k, m.a12,
                m.a21 - (k + 3) * m.a11 + k * (2 * k + 3) * (m.a12 - 1),
                -m.a22 + (2 * k + 3) * m.a12 - k);
}

Mat2 psi_inv(const Int& k, const Mat2& m) {
    return Mat2(-m.a11 + m.a12 * k - k, m.a12,
                m.a21 - (k + 3) * m.a11 - k * k * (m.a12 - 1),
                -m.a22 + (2 * k + 3) * m.a12 - k);
}

MatTriple psi_triple(const Int& k, const MatTriple& t) {
    return MatTriple{psi(k, t.first), psi(k, t.second), psi(k, t.third)};
}

MatTriple psi_inv_triple(const Int& k, const MatTriple& t) {
    return MatTriple{psi_inv(k, t.first), psi_inv(k, t.second), psi_inv(k, t.third)};
}

MatTriple phi_triple(const MatTriple& t) {
    return MatTriple{-mat_inv(t.second * t.third), -mat_inv(t.first * t.third),
                     -mat_inv(t.first * t.second)};
}

MatTriple mm_decompose(const Int& k, const MatTriple& gc) {
    validate_gc_triple(k, gc);
    MatTriple d = psi_inv_triple(k, phi_triple(psi_inv_triple(k, gc)));
    if (d.first.a12 < 0)
        d = MatTriple{-d.first, -d.second, -d.third};
    // Decomposition identities; the traces are equal by the MM trace condition.
    if (gc.first != -mat_inv(d.third) * mat_inv(d.second) ||
        gc.second != -mat_inv(d.third) * mat_inv(d.first) ||
        gc.third != -mat_inv(d.second) * mat_inv(d.first))
        throw std::logic_error("mm_decompose: factor identities violated");
    return d;
}

MatTriple mm_decompose_parabolic(const MatTriple& gc) {
    validate_gc_triple(2, gc);
    Mat2 ysq = -(mat_inv(gc.first) * gc.second * mat_inv(gc.third));
    Mat2 sum = ysq + Mat2::identity();
    Mat2 y(exact_div(sum.a11, 2), exact_div(sum.a12, 2), exact_div(sum.a21, 2),
           exact_div(sum.a22, 2));
    Mat2 x = -(mat_inv(gc.third) * mat_inv(y));
    Mat2 z = -(mat_inv(y) * mat_inv(gc.first));
    MatTriple d{x, y, z};
    if (d.first.a12 < 0)
        d = MatTriple{-d.first, -d.second, -d.third};
    return d;
}

Mat2 conjugate_ell(const Mat2& m, const Int& ell_from, const Int& ell_to) {
    Mat2 l = l_mat(ell_to - ell_from);
    return mat_inv(l) * m * l;
}

MatTriple conjugate_ell(const MatTriple& t, const Int& ell_from, const Int& ell_to) {
    return MatTriple{conjugate_ell(t.first, ell_from, ell_to),
                     conjugate_ell(t.second, ell_from, ell_to),
                     conjugate_ell(t.third, ell_from, ell_to)};
}

} // namespace gmarkov
