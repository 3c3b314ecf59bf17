#pragma once

#include "gmarkov/ints.hpp"

#include <compare>
#include <iosfwd>

namespace gmarkov {

// Reduced fraction num/den with den >= 0 and gcd(|num|, den) = 1.
// den == 0 encodes the point at infinity, normalized to 1/0.
// Under comparison, infinity is larger than every finite value.
class Frac {
public:
    Frac() : num_(0), den_(1) {}
    Frac(Int n) : num_(std::move(n)), den_(1) {}
    Frac(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Frac infinity() { return Frac(1, 0); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }

    bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    bool operator<(const Frac& o) const {
        if (is_infinity()) return false;
        if (o.is_infinity()) return true;
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator>(const Frac& o) const { return o < *this; }
    bool operator<=(const Frac& o) const { return !(o < *this); }
    bool operator>=(const Frac& o) const { return !(*this < o); }

    Frac reciprocal() const { return Frac(den_, num_); }

    // Mediant of two fractions written as column vectors; pairs with the
    // Stern-Brocot / Farey descent.
    static Frac mediant(const Frac& a, const Frac& b) {
        return Frac(a.num_ + b.num_, a.den_ + b.den_);
    }

    // ad - bc for a/b, c/d; infinity participates as 1/0.
    static Int det(const Frac& x, const Frac& y) {
        return x.num_ * y.den_ - x.den_ * y.num_;
    }

    std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

private:
    void reduce() {
        if (den_ == 0) {
            if (num_ == 0)
                throw std::domain_error("Frac: 0/0");
            num_ = 1; // single point at infinity on RP^1
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

inline std::ostream& operator<<(std::ostream& os, const Frac& f);

} // namespace gmarkov

#include <ostream>

namespace gmarkov {
inline std::ostream& operator<<(std::ostream& os, const Frac& f) {
    return os << f.num().get_str() << "/" << f.den().get_str();
}
} // namespace gmarkov
