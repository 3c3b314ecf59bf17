#include "gmarkov/contfrac.hpp"

#include <algorithm>

namespace gmarkov {

Int matching_count(const RegCF& cf) {
    Int prev(1); // K of the empty sequence
    Int cur(1);
    bool first = true;
    for (const Int& a : cf.terms) {
        if (first) {
            cur = a;
            first = false;
        } else {
            Int next = a * cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return cur;
}

Frac cf_eval(const RegCF& cf) {
    if (cf.terms.empty())
        return Frac(1);
    Int num = matching_count(cf);
    RegCF tail(std::vector<Int>(cf.terms.begin() + 1, cf.terms.end()));
    Int den = matching_count(tail);
    return Frac(num, den);
}

Frac hj_eval(const HJChain& chain) {
    // Right-to-left: (n, d) -> (b*n - d, n), starting from the last term.
    Int n = chain.terms.back();
    Int d = 1;
    for (auto it = chain.terms.rbegin() + 1; it != chain.terms.rend(); ++it) {
        Int next = *it * n - d;
        d = std::move(n);
        n = std::move(next);
    }
    return Frac(n, d);
}

RegCF cf_normalize(const RegCF& cf) {
    if (cf.terms.size() >= 2 && cf.terms.back() == 1) {
        std::vector<Int> t(cf.terms.begin(), cf.terms.end() - 1);
        t.back() += 1;
        return RegCF(std::move(t));
    }
    return cf;
}

RegCF cf_reverse(const RegCF& cf) {
    std::vector<Int> t(cf.terms.rbegin(), cf.terms.rend());
    return RegCF(std::move(t));
}

} // namespace gmarkov
