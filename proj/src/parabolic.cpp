#include "gmarkov/parabolic.hpp"

#include <deque>
#include <stdexcept>

namespace gmarkov {

Frac fixed_point(const Mat2& m) {
    if (m.det() != 1 || m.trace() != -2)
        throw std::invalid_argument("fixed_point: matrix is not parabolic in SL(2,Z)");
    if (m.a21 == 0)
        return Frac::infinity();
    Int num = isqrt_exact(m.a12);
    Int den = isqrt_exact(-m.a21);
    if (m.a11 < m.a22)
        return Frac(num, den);
    if (m.a11 > m.a22)
        return Frac(-num, den);
    return Frac(num, den); // a11 == a22 forces a12 = 0, the fixed point is 0
}

PTVertex pt_root(const Int& l) {
    return PTVertex{1, -l - 1, 2, -2 * l + 1, 1, -l + 2};
}

PTVertex pt_dagger_root(const Int& l) {
    return PTVertex{1, -l - 1, 1, -l + 2, 1, -l + 5};
}

std::pair<PTVertex, PTVertex> pt_children(const PTVertex& v) {
    PTVertex left{v.p, v.pp,
                  v.q * v.q * v.rp - v.q * v.qp * v.r - v.r,
                  -v.qp * v.qp * v.r + v.q * v.qp * v.rp - v.rp,
                  v.q, v.qp};
    PTVertex right{v.q, v.qp,
                   -v.q * v.q * v.pp + v.q * v.qp * v.p - v.p,
                   v.qp * v.qp * v.p - v.q * v.qp * v.pp - v.pp,
                   v.r, v.rp};
    return {left, right};
}

std::pair<PTVertex, PTVertex> pt_dagger_children(const PTVertex& v) {
    PTVertex left{v.p, v.pp, v.r, v.rp,
                  -v.r * v.r * v.qp + v.r * v.rp * v.q - v.q,
                  v.rp * v.rp * v.q - v.r * v.rp * v.qp - v.qp};
    PTVertex right{v.p * v.p * v.qp - v.p * v.pp * v.q - v.q,
                   -v.pp * v.pp * v.q + v.p * v.pp * v.qp - v.qp,
                   v.p, v.pp, v.r, v.rp};
    return {left, right};
}

PTVertex pt_vertex_at(bool dagger, const Int& l, const std::string& path) {
    PTVertex v = dagger ? pt_dagger_root(l) : pt_root(l);
    for (char step : path) {
        auto ch = dagger ? pt_dagger_children(v) : pt_children(v);
        if (step == 'L')
            v = ch.first;
        else if (step == 'R')
            v = ch.second;
        else
            throw std::invalid_argument("pt_vertex_at: step must be L or R");
    }
    return v;
}

std::vector<std::pair<std::string, PTVertex>> enumerate_pt_tree(bool dagger, const Int& l,
                                                                int depth) {
    if (depth < 0)
        throw std::invalid_argument("enumerate_pt_tree: negative depth");
    std::vector<std::pair<std::string, PTVertex>> out;
    std::deque<std::pair<std::string, PTVertex>> queue;
    queue.push_back({"", dagger ? pt_dagger_root(l) : pt_root(l)});
    while (!queue.empty()) {
        auto [path, v] = queue.front();
        queue.pop_front();
        out.push_back({path, v});
        if (static_cast<int>(path.size()) >= depth) continue;
        auto ch = dagger ? pt_dagger_children(v) : pt_children(v);
        queue.push_back({path + "L", ch.first});
        queue.push_back({path + "R", ch.second});
    }
    return out;
}

GMTriple markov_projection(const PTVertex& v) { return GMTriple{v.p, v.q, v.r}; }

std::array<Int, 3> determinant_triple(const PTVertex& v) {
    return {v.q * v.rp - v.qp * v.r, v.p * v.rp - v.pp * v.r, v.p * v.qp - v.pp * v.q};
}

PTVertex fixed_point_triple_of_mm(const MatTriple& t) {
    Frac fx = fixed_point(t.first);
    Frac fy = fixed_point(t.second);
    Frac fz = fixed_point(t.third);
    return PTVertex{fx.num(), fx.den(), fy.num(), fy.den(), fz.num(), fz.den()};
}

GMTriple square_correspondence_forward(const GMTriple& t) {
    return GMTriple{t.a * t.a, t.b * t.b, t.c * t.c};
}

GMTriple square_correspondence_backward(const GMTriple& t) {
    return GMTriple{isqrt_exact(t.a), isqrt_exact(t.b), isqrt_exact(t.c)};
}

} // namespace gmarkov
