#include "gmarkov/farey.hpp"

#include <stdexcept>

namespace gmarkov {

bool is_farey_triple(const FareyTriple& f) {
    Int d1 = Frac::det(f.r, f.t);
    Int d2 = Frac::det(f.t, f.s);
    Int d3 = Frac::det(f.r, f.s);
    auto pm1 = [](const Int& d) { return d == 1 || d == -1; };
    return pm1(d1) && pm1(d2) && pm1(d3);
}

FareyTriple farey_triple_of(const Frac& t) {
    if (t.is_infinity() || t.num() <= 0)
        throw std::invalid_argument("farey_triple_of: t must be a positive rational");
    Frac lo(Int(0));
    Frac hi = Frac::infinity();
    Frac mid(Int(1));
    while (mid != t) {
        if (t < mid)
            hi = mid;
        else
            lo = mid;
        mid = Frac::mediant(lo, hi);
    }
    return FareyTriple{lo, mid, hi};
}

FareyTriple farey_parents(const Frac& t) {
    if (t.is_infinity() || t.num() <= 0 || t.num() >= t.den())
        throw std::invalid_argument("farey_parents: t must lie in (0,1)");
    return farey_triple_of(t);
}

std::string christoffel(const Frac& t) {
    if (t.is_infinity() || t.num() <= 0 || t.num() > t.den())
        throw std::invalid_argument("christoffel: t must lie in (0,1]");
    const Int& a = t.num();
    const Int& b = t.den();
    std::string word;
    Int prev = 0;
    for (Int i = 1; i <= b; ++i) {
        Int cur = (a * i) / b; // floor, operands positive
        word += (cur == prev) ? 'A' : 'B';
        prev = cur;
    }
    return word;
}

} // namespace gmarkov
