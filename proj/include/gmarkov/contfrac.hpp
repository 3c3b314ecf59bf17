#pragma once

#include "gmarkov/frac.hpp"
#include "gmarkov/ints.hpp"

#include <string>
#include <vector>

namespace gmarkov {

// Regular continued fraction [a1,...,al] = a1 + 1/(a2 + 1/(...)), all terms >= 1.
// The empty sequence denotes the value 1. Trailing 1s are kept as written;
// cf_normalize folds [..., a, 1] into [..., a+1] on request.
struct RegCF {
    std::vector<Int> terms;

    RegCF() = default;
    explicit RegCF(std::vector<Int> t) : terms(std::move(t)) { validate(); }
    RegCF(std::initializer_list<Int> t) : terms(t) { validate(); }

    bool operator==(const RegCF&) const = default;
    std::size_t size() const { return terms.size(); }

    void validate() const {
        for (const Int& a : terms)
            if (a < 1)
                throw std::invalid_argument("RegCF: term " + a.get_str() + " < 1");
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) s += ",";
            s += terms[i].get_str();
        }
        return s + "]";
    }
};

// Hirzebruch-Jung chain [[b1,...,bs]] = b1 - 1/(b2 - 1/(...)), all terms >= 2, non-empty.
struct HJChain {
    std::vector<Int> terms;

    HJChain() = default;
    explicit HJChain(std::vector<Int> t) : terms(std::move(t)) { validate(); }
    HJChain(std::initializer_list<Int> t) : terms(t) { validate(); }

    bool operator==(const HJChain&) const = default;
    std::size_t size() const { return terms.size(); }

    void validate() const {
        if (terms.empty())
            throw std::invalid_argument("HJChain: empty chain");
        for (const Int& b : terms)
            if (b < 2)
                throw std::invalid_argument("HJChain: term " + b.get_str() + " < 2");
    }

    std::string str() const {
        std::string s = "[[";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) s += ",";
            s += terms[i].get_str();
        }
        return s + "]]";
    }
};

// Continuant K(a_i,...,a_j): K() = 1, K(a) = a, K extends by
// K(a_i..a_j) = a_j * K(a_i..a_{j-1}) + K(a_i..a_{j-2}).
// K(a_1..a_l) counts the perfect matchings of the snake graph G[a_1,...,a_l].
Int matching_count(const RegCF& cf);

// Value of a regular continued fraction: K(a_1..a_l) / K(a_2..a_l), reduced.
Frac cf_eval(const RegCF& cf);

// Value of an HJ chain, reduced; > 1 whenever all terms >= 2.
Frac hj_eval(const HJChain& chain);

// Folds one trailing 1: [..., a, 1] -> [..., a+1]. Other inputs are returned as is.
RegCF cf_normalize(const RegCF& cf);

RegCF cf_reverse(const RegCF& cf);

} // namespace gmarkov
