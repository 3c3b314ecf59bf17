#include "gmarkov/markov.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace gmarkov {

namespace {

// Conjugate-root values by the linear forms; integrality is automatic on
// GM triples, no division involved.
Int jump_first(const Int& k, const GMTriple& t) {
    return (3 + 3 * k) * t.b * t.c - t.a - k * t.c - k * t.b;
}
Int jump_second(const Int& k, const GMTriple& t) {
    return (3 + 3 * k) * t.a * t.c - t.b - k * t.c - k * t.a;
}
Int jump_third(const Int& k, const GMTriple& t) {
    return (3 + 3 * k) * t.a * t.b - t.c - k * t.b - k * t.a;
}

#ifndef NDEBUG
// Division form of the jumps, compared against the linear forms in debug builds.
bool division_form_agrees(const Int& k, const GMTriple& t) {
    if (!is_gm_triple(k, t)) return true;
    Int n1 = t.b * t.b + k * t.b * t.c + t.c * t.c;
    Int n2 = t.a * t.a + k * t.a * t.c + t.c * t.c;
    Int n3 = t.a * t.a + k * t.a * t.b + t.b * t.b;
    return n1 % t.a == 0 && n1 / t.a == jump_first(k, t) &&
           n2 % t.b == 0 && n2 / t.b == jump_second(k, t) &&
           n3 % t.c == 0 && n3 / t.c == jump_third(k, t);
}
#endif

} // namespace

bool is_gm_triple(const Int& k, const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1) return false;
    return a * a + b * b + c * c + k * (b * c + c * a + a * b) == (3 + 3 * k) * a * b * c;
}

bool is_gsme_solution(const Int& k, const Int& x, const Int& y, const Int& z) {
    return x * x + y * y + z * z + (2 * k + k * k) * (x + y + z) + 2 * k * k * k + 3 * k * k ==
           x * y * z;
}

bool is_gm_number(const Int& k, const Int& n) {
    if (n < 1) return false;
    if (n == 1 || n == k + 2) return true;
    std::vector<GMTriple> stack{GMTriple{1, k + 2, 1}};
    while (!stack.empty()) {
        GMTriple t = stack.back();
        stack.pop_back();
        if (t.a == n || t.b == n || t.c == n) return true;
        auto [l, r] = mt_children(k, t);
        if (l.b <= n) stack.push_back(l);
        if (r.b <= n) stack.push_back(r);
    }
    return false;
}

GMTriple vieta(const Int& k, const GMTriple& t, int which) {
    assert(division_form_agrees(k, t));
    switch (which) {
    case 1: return GMTriple{jump_first(k, t), t.b, t.c};
    case 2: return GMTriple{t.a, jump_second(k, t), t.c};
    case 3: return GMTriple{t.a, t.b, jump_third(k, t)};
    default: throw std::invalid_argument("vieta: coordinate must be 1, 2 or 3");
    }
}

std::pair<GMTriple, GMTriple> mt_children(const Int& k, const GMTriple& t) {
    assert(division_form_agrees(k, t));
    return {GMTriple{t.a, jump_third(k, t), t.b}, GMTriple{t.b, jump_first(k, t), t.c}};
}

std::pair<GMTriple, GMTriple> mtd_children(const Int& k, const GMTriple& t) {
    assert(division_form_agrees(k, t));
    Int b2 = jump_second(k, t);
    return {GMTriple{t.a, t.c, b2}, GMTriple{b2, t.a, t.c}};
}

GMTriple mu(const Int& k, const GMTriple& t) {
    assert(division_form_agrees(k, t));
    return GMTriple{t.a, jump_second(k, t), t.c};
}

std::vector<GMTriple> tk_children(const Int& k, const GMTriple& t) {
    if (t.a == 1 && t.b == 1 && t.c == 1)
        return {GMTriple{k + 2, 1, 1}, GMTriple{1, k + 2, 1}, GMTriple{1, 1, k + 2}};
    // Below depth 1 the maximum coordinate is unique.
    if (t.a > t.b && t.a > t.c)
        return {vieta(k, t, 2), vieta(k, t, 3)};
    if (t.b > t.a && t.b > t.c)
        return {vieta(k, t, 1), vieta(k, t, 3)};
    if (t.c > t.a && t.c > t.b)
        return {vieta(k, t, 1), vieta(k, t, 2)};
    throw std::invalid_argument("tk_children: no unique maximal coordinate in " + t.str());
}

GMTriple tree_root(TripleTree tree, const Int& k) {
    switch (tree) {
    case TripleTree::TK: return GMTriple{1, 1, 1};
    case TripleTree::MT: return GMTriple{1, k + 2, 1};
    case TripleTree::MTD: return GMTriple{1, 1, 1};
    }
    throw std::logic_error("tree_root: bad tree id");
}

GMTriple vertex_at(const TreeAddress& addr) {
    GMTriple t = tree_root(addr.tree, addr.k);
    for (std::size_t i = 0; i < addr.path.size(); ++i) {
        char step = addr.path[i];
        if (addr.tree == TripleTree::TK && i == 0) {
            auto cs = tk_children(addr.k, t);
            if (step < '1' || step > '3')
                throw std::invalid_argument("vertex_at: first TK step must be 1, 2 or 3");
            t = cs[static_cast<std::size_t>(step - '1')];
            continue;
        }
        bool left;
        if (step == 'L')
            left = true;
        else if (step == 'R')
            left = false;
        else
            throw std::invalid_argument("vertex_at: step must be L or R");
        switch (addr.tree) {
        case TripleTree::TK: {
            auto cs = tk_children(addr.k, t);
            t = left ? cs[0] : cs[1];
            break;
        }
        case TripleTree::MT: {
            auto [l, r] = mt_children(addr.k, t);
            t = left ? l : r;
            break;
        }
        case TripleTree::MTD: {
            auto [l, r] = mtd_children(addr.k, t);
            t = left ? l : r;
            break;
        }
        }
    }
    return t;
}

std::array<Int, 3> gsme_lift(const Int& k, const GMTriple& t) {
    Int s = 3 + 3 * k;
    return {s * t.a - k, s * t.b - k, s * t.c - k};
}

std::vector<std::pair<TreeAddress, GMTriple>> enumerate_triples(TripleTree tree, const Int& k,
                                                                int depth) {
    if (depth < 0)
        throw std::invalid_argument("enumerate_triples: negative depth");
    std::vector<std::pair<TreeAddress, GMTriple>> out;
    std::deque<std::pair<TreeAddress, GMTriple>> queue;
    queue.push_back({TreeAddress{tree, k, ""}, tree_root(tree, k)});
    while (!queue.empty()) {
        auto [addr, t] = queue.front();
        queue.pop_front();
        out.push_back({addr, t});
        if (static_cast<int>(addr.path.size()) >= depth) continue;
        if (tree == TripleTree::TK && addr.path.empty()) {
            auto cs = tk_children(k, t);
            for (int i = 0; i < 3; ++i)
                queue.push_back({TreeAddress{tree, k, std::string(1, char('1' + i))}, cs[i]});
            continue;
        }
        std::pair<GMTriple, GMTriple> ch;
        switch (tree) {
        case TripleTree::TK: {
            auto cs = tk_children(k, t);
            ch = {cs[0], cs[1]};
            break;
        }
        case TripleTree::MT: ch = mt_children(k, t); break;
        case TripleTree::MTD: ch = mtd_children(k, t); break;
        }
        queue.push_back({TreeAddress{tree, k, addr.path + "L"}, ch.first});
        queue.push_back({TreeAddress{tree, k, addr.path + "R"}, ch.second});
    }
    return out;
}

} // namespace gmarkov
