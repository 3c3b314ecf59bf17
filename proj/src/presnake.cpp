#include "gmarkov/presnake.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmarkov {

namespace {

// Crossing event along the open segment (0,0) -> (b,a), at exact parameter
// lam_num/lam_den, with the doubled midpoint of the crossed edge.
struct Event {
    Int lam_num, lam_den;
    Int mx2, my2;
};

bool event_before(const Event& e1, const Event& e2) {
    return e1.lam_num * e2.lam_den < e2.lam_num * e1.lam_den;
}

// Continuant of terms[lo..hi) with K(empty) = 1.
Int continuant(const std::vector<Int>& terms, std::size_t lo, std::size_t hi) {
    Int prev(1), cur(1);
    bool first = true;
    for (std::size_t i = lo; i < hi; ++i) {
        if (first) {
            cur = terms[i];
            first = false;
        } else {
            Int next = terms[i] * cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return cur;
}

} // namespace

SignSeq presnake_signs(const Int& k, const Frac& t) {
    if (t.is_infinity() || t.num() <= 0)
        throw std::invalid_argument("presnake_signs: t must be a positive rational");
    const Int& a = t.num();
    const Int& b = t.den();

    std::vector<Event> events;
    // Vertical grid lines x = i, crossing the edge from (i, floor(ai/b)) up.
    for (Int i = 1; i < b; ++i)
        events.push_back(Event{i, b, 2 * i, 2 * ((a * i) / b) + 1});
    // Horizontal grid lines y = j.
    for (Int j = 1; j < a; ++j)
        events.push_back(Event{j, a, 2 * ((b * j) / a) + 1, 2 * j});
    // Anti-diagonals x + y = s of the crossed cells.
    for (Int s = 1; s < a + b; ++s) {
        Int cx = (b * s) / (a + b);
        Int cy = s - 1 - cx;
        events.push_back(Event{s, a + b, 2 * cx + 1, 2 * cy + 1});
    }
    std::sort(events.begin(), events.end(), event_before);

    // One triangle per gap between consecutive events (plus the two ends).
    // Classified at the exact midpoint of the gap.
    auto triangle_sign = [&](const Int& lo_n, const Int& lo_d, const Int& hi_n,
                             const Int& hi_d) -> int {
        Int mn = lo_n * hi_d + hi_n * lo_d;
        Int md = 2 * lo_d * hi_d;
        Int px_num = b * mn, py_num = a * mn; // point (px_num/md, py_num/md)
        Int cx = px_num / md, cy = py_num / md;
        bool lower = (px_num - cx * md) + (py_num - cy * md) < md;
        std::array<std::array<Int, 2>, 3> verts;
        if (lower)
            verts = {{{cx, cy}, {cx + 1, cy}, {cx, cy + 1}}};
        else
            verts = {{{cx + 1, cy}, {cx, cy + 1}, {cx + 1, cy + 1}}};
        int below = 0;
        for (const auto& v : verts)
            if (a * v[0] - b * v[1] > 0) ++below;
        return below == 1 ? -1 : 1;
    };

    SignSeq out;
    const std::size_t n = events.size();
    for (std::size_t i = 0; i <= n; ++i) {
        int tri;
        if (i == 0)
            tri = -1; // chord degenerates at (0,0)
        else if (i == n)
            tri = +1; // chord degenerates at (b,a)
        else
            tri = triangle_sign(events[i - 1].lam_num, events[i - 1].lam_den,
                                events[i].lam_num, events[i].lam_den);
        out.signs.push_back(tri);
        if (i < n && k > 0) {
            const Event& e = events[i];
            Int side = a * e.mx2 - b * e.my2;
            int sgn = side > 0 ? +1 : -1; // midpoint on the segment counts as minus
            if (side == 0) out.central_index = static_cast<long>(out.signs.size());
            for (Int c = 0; c < k; ++c)
                out.signs.push_back(sgn);
        }
    }
    return out;
}

RegCF run_lengths(const std::vector<int>& signs) {
    std::vector<Int> terms;
    std::size_t i = 0;
    while (i < signs.size()) {
        std::size_t j = i;
        while (j < signs.size() && signs[j] == signs[i]) ++j;
        terms.push_back(Int(static_cast<unsigned long>(j - i)));
        i = j;
    }
    return RegCF(std::move(terms));
}

RegCF f_plus(const Int& k, const Frac& t) {
    if (k < 0)
        throw std::invalid_argument("f_plus: k must be >= 0");
    if (t == Frac(0))
        return RegCF{};
    return run_lengths(presnake_signs(k, t).signs);
}

RegCF g_plus(const Int& k, const Frac& t) {
    if (k < 0)
        throw std::invalid_argument("g_plus: k must be >= 0");
    if (t == Frac(0))
        return RegCF{};
    SignSeq seq = presnake_signs(k, t);
    if (seq.central_index >= 0) {
        unsigned long copies = k.get_ui();
        for (unsigned long c = 0; c < copies; ++c)
            seq.signs[static_cast<std::size_t>(seq.central_index) + c] = +1;
    }
    return run_lengths(seq.signs);
}

RegCF f_plus_recursive(const Int& k, const Frac& t) {
    if (t == Frac(0)) return RegCF{};
    if (t == Frac(1)) return RegCF{std::vector<Int>{k + 1, 1}};
    if (t == Frac(1, 2)) return RegCF{std::vector<Int>{2 * k + 2, k + 2}};
    if (t.is_infinity() || t.num() <= 0 || t.num() >= t.den())
        throw std::invalid_argument("f_plus_recursive: t must lie in (0,1)");

    FareyTriple f = farey_parents(t);
    std::vector<Int> out;
    if (f.r == Frac(0)) {
        // (1): t = 1/(p+1), s = 1/p: [2k+2, 1, b_m - 1, b_{m-1}, ..., b_1]
        RegCF fs = f_plus_recursive(k, f.s);
        out.push_back(2 * k + 2);
        out.push_back(1);
        out.push_back(fs.terms.back() - 1);
        for (auto it = fs.terms.rbegin() + 1; it != fs.terms.rend(); ++it)
            out.push_back(*it);
    } else if (f.s == Frac(1)) {
        // (2): [a_l, ..., a_1, 3k+2, k+2]
        RegCF fr = f_plus_recursive(k, f.r);
        out.assign(fr.terms.rbegin(), fr.terms.rend());
        out.push_back(3 * k + 2);
        out.push_back(k + 2);
    } else {
        // (3): [a_l, ..., a_1, 3k+2, 1, b_m - 1, b_{m-1}, ..., b_1]
        RegCF fr = f_plus_recursive(k, f.r);
        RegCF fs = f_plus_recursive(k, f.s);
        out.assign(fr.terms.rbegin(), fr.terms.rend());
        out.push_back(3 * k + 2);
        out.push_back(1);
        out.push_back(fs.terms.back() - 1);
        for (auto it = fs.terms.rbegin() + 1; it != fs.terms.rend(); ++it)
            out.push_back(*it);
    }
    return RegCF(std::move(out));
}

bool is_semi_palindrome(const RegCF& cf, const Int& k) {
    std::size_t l = cf.size();
    if (l % 2 != 0 || l == 0) return false;
    std::size_t h = l / 2;
    for (std::size_t i = 0; i + 1 < h; ++i)
        if (cf.terms[i] != cf.terms[l - 1 - i]) return false;
    return h % 2 == 0 ? cf.terms[h] == cf.terms[h - 1] + k
                      : cf.terms[h] == cf.terms[h - 1] - k;
}

RegCF reciprocal_transform(const RegCF& cf) {
    const auto& a = cf.terms;
    if (a.size() < 2)
        throw std::invalid_argument("reciprocal_transform: need at least two terms");
    if (a.back() < 2 || a.front() < 2)
        throw std::invalid_argument("reciprocal_transform: end terms would drop below 1");
    std::vector<Int> out;
    out.push_back(1);
    out.push_back(a.back() - 1);
    for (std::size_t i = a.size() - 2; i >= 1; --i)
        out.push_back(a[i]);
    out.push_back(a.front() - 1);
    out.push_back(1);
    return RegCF(std::move(out));
}

Int m_of(const Int& k, const Frac& t) {
    if (t == Frac(0)) return 1;
    return matching_count(f_plus(k, t));
}

CharNumbers char_numbers(const Int& k, const Frac& t) {
    FareyTriple f = farey_parents(t);
    Int mr = m_of(k, f.r);
    Int ms = m_of(k, f.s);

    RegCF cf = f_plus(k, t);
    Int m = continuant(cf.terms, 0, cf.terms.size());
    Int u_plus = continuant(cf.terms, 1, cf.terms.size());

    // Independent congruence route: m_r x = m_s (mod m), unique in (0, m).
    Int u_cong = mod_reduce(mod_inverse(mr, m) * ms, m);
    if (u_cong != u_plus)
        throw std::logic_error("char_numbers: denominator and congruence routes disagree");

    CharNumbers c;
    c.m = m;
    c.u_plus = u_plus;
    c.u_minus = m - u_plus;
    c.v_plus = mod_reduce(mod_inverse(ms, m) * mr, m);
    c.v_minus = mod_reduce(mod_inverse(ms, m) * (m - mod_reduce(mr, m)), m);
    if (c.v_plus != m - u_plus - k || c.v_minus != u_plus + k)
        throw std::logic_error("char_numbers: v congruences disagree with closed forms");
    c.w = exact_div(c.u_plus * c.v_minus + 1, m);
    c.w_prime = exact_div(c.u_minus * c.v_plus + 1, m);
    if (!(0 < c.u_plus && 2 * c.u_plus < m && 2 * c.v_minus < m && 2 * c.u_minus > m &&
          2 * c.v_plus > m && c.u_minus < m && c.v_plus < m))
        throw std::logic_error("char_numbers: ordering invariant violated");
    return c;
}

Mat2 mm_from_cf(const Int& k, const Frac& t) {
    if (t == Frac(0))
        return Mat2(0, 1, -1, -k);
    if (t.is_infinity() || t.num() > t.den())
        throw std::invalid_argument("mm_from_cf: t must lie in [0,1]");
    RegCF cf = f_plus(k, t);
    const auto& a = cf.terms;
    std::size_t l = a.size();
    return Mat2(-continuant(a, 0, l - 1), continuant(a, 0, l),
                -continuant(a, 1, l - 1), continuant(a, 1, l));
}

Mat2 gc_from_cf(const Int& k, const Frac& t) {
    if (t == Frac(0))
        return Mat2(-k, 1, -(3 * k * k + 3 * k + 1), 3 * k + 3);
    if (t.is_infinity() || t.num() > t.den())
        throw std::invalid_argument("gc_from_cf: t must lie in [0,1]");
    RegCF cf = f_plus(k, t);
    const auto& a = cf.terms;
    std::size_t l = a.size();
    Int c11 = continuant(a, 1, l);
    Int c12 = continuant(a, 0, l);
    Int c21 = (3 * k + 3) * c11 - continuant(a, 1, l - 1);
    Int c22 = (3 * k + 3) * c12 - continuant(a, 0, l - 1);
    return Mat2(c11, c12, c21, c22);
}

Mat2 labeled_matrix(const Int& k, const Int& ell, const Frac& t, LabelFamily family) {
    MatFamily fam = family == LabelFamily::MM ? MatFamily::MM : MatFamily::GC;
    MatTriple cur = mat_tree_root(fam, k, ell);
    if (t == Frac(0)) return cur.first;
    if (t.is_infinity()) return cur.third;
    if (t.num() <= 0)
        throw std::invalid_argument("labeled_matrix: t must be a non-negative rational");
    Frac lo(Int(0));
    Frac hi = Frac::infinity();
    Frac mid(Int(1));
    while (mid != t) {
        auto ch = mat_tree_children(fam, k, cur);
        if (t < mid) {
            cur = ch.first;
            hi = mid;
        } else {
            cur = ch.second;
            lo = mid;
        }
        mid = Frac::mediant(lo, hi);
    }
    return cur.second;
}

} // namespace gmarkov
