#pragma once

#include "gmarkov/frac.hpp"
#include "gmarkov/ints.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace gmarkov {

// 2x2 integer matrix [[a11, a12], [a21, a22]] acting on RP^1 as a Moebius
// transformation. Determinant is not constrained here; unimodularity is
// asserted where a construction needs it.
struct Mat2 {
    Int a11, a12, a21, a22;

    Mat2() : a11(0), a12(0), a21(0), a22(0) {}
    Mat2(Int m11, Int m12, Int m21, Int m22)
        : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {}

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }

    bool operator==(const Mat2&) const = default;

    Int det() const { return a11 * a22 - a12 * a21; }
    Int trace() const { return a11 + a22; }

    Mat2 operator*(const Mat2& o) const {
        return Mat2(a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                    a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22);
    }
    Mat2 operator+(const Mat2& o) const {
        return Mat2(a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22);
    }
    Mat2 operator-(const Mat2& o) const {
        return Mat2(a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22);
    }
    Mat2 operator-() const { return Mat2(-a11, -a12, -a21, -a22); }

    std::string str() const {
        return "[[" + a11.get_str() + "," + a12.get_str() + "],[" + a21.get_str() + "," +
               a22.get_str() + "]]";
    }
};

// Exact inverse, defined only for det = +-1 so that entries stay integral.
inline Mat2 mat_inv(const Mat2& m) {
    Int d = m.det();
    if (d == 1)
        return Mat2(m.a22, -m.a12, -m.a21, m.a11);
    if (d == -1)
        return Mat2(-m.a22, m.a12, m.a21, -m.a11);
    throw std::domain_error("mat_inv: determinant " + d.get_str() + " is not +-1");
}

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) { return a * b; }

// Moebius action on RP^1; total for |det| = 1 (the image of 1/0 is a11/a21).
inline Frac mobius_apply(const Mat2& m, const Frac& x) {
    Int d = m.det();
    if (d != 1 && d != -1)
        throw std::domain_error("mobius_apply: determinant is not +-1");
    return Frac(m.a11 * x.num() + m.a12 * x.den(), m.a21 * x.num() + m.a22 * x.den());
}

inline std::ostream& operator<<(std::ostream& os, const Mat2& m);

} // namespace gmarkov

#include <ostream>

namespace gmarkov {
inline std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }
} // namespace gmarkov
