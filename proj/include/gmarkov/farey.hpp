#pragma once

#include "gmarkov/frac.hpp"

#include <string>

namespace gmarkov {

// Farey triple (r, t, s) with r < t < s and pairwise determinants +-1;
// t is the mediant of r and s.
struct FareyTriple {
    Frac r, t, s;

    bool operator==(const FareyTriple&) const = default;

    std::string str() const { return "(" + r.str() + "," + t.str() + "," + s.str() + ")"; }
};

bool is_farey_triple(const FareyTriple& f);

// Stern-Brocot descent from (0/1, 1/1, 1/0); defined for every irreducible
// t in (0, infinity).
FareyTriple farey_triple_of(const Frac& t);

// The unique Farey triple with middle entry t, for t in (0,1).
FareyTriple farey_parents(const Frac& t);

// Christoffel word of a/b with 0 < a/b <= 1, as a string over {A, B} of
// length b; the i-th letter records the rise of floor heights along the
// lattice path under the segment of slope a/b.
std::string christoffel(const Frac& t);

} // namespace gmarkov
