#include "gmarkov/contfrac.hpp"
#include "gmarkov/frac.hpp"
#include "gmarkov/mat2.hpp"

#include <doctest.h>
#include <random>

using namespace gmarkov;

TEST_CASE("matrix product and inverse") {
    Mat2 id = Mat2::identity();
    Mat2 m(5, 3, 3, 2);
    CHECK(id * m == m);
    CHECK(mat_inv(id) == id);

    // X * Y of the k=1, l=0 monodromy root, multiplied by hand.
    Mat2 x(0, 1, -1, -1), y(-2, 3, -1, 1);
    CHECK(x * y == Mat2(-1, 1, 3, -4));
    CHECK(mat_inv(x) == Mat2(-1, -1, 1, 0));

    Mat2 s(1, 0, 6, 1);
    CHECK(s * s == Mat2(1, 0, 12, 1));

    CHECK_THROWS_AS(mat_inv(Mat2(2, 0, 0, 1)), std::domain_error);
}

TEST_CASE("fraction normalization and infinity") {
    CHECK(Frac(6, -4) == Frac(-3, 2));
    CHECK(Frac(0, 7) == Frac(0, 1));
    CHECK(Frac(5, 0) == Frac::infinity());
    CHECK(Frac(3, 7) < Frac::infinity());
    CHECK(Frac(-1, 2) < Frac(1, 3));
}

TEST_CASE("mobius action") {
    CHECK(mobius_apply(Mat2::identity(), Frac(3, 7)) == Frac(3, 7));

    // Fixed point of M_{1/2}(2,0).
    Mat2 m(-6, 25, -1, 4);
    CHECK(mobius_apply(m, Frac(5, 1)) == Frac(5, 1));

    // Parabolic at infinity: a21 = 0 fixes 1/0.
    Mat2 upper(1, 4, 0, 1);
    CHECK(mobius_apply(upper, Frac::infinity()) == Frac::infinity());

    // Composition law, including points mapping through infinity.
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> d(-9, 9);
    auto random_unimodular = [&]() {
        // random product of elementary matrices keeps |det| = 1
        Mat2 m = Mat2::identity();
        for (int i = 0; i < 6; ++i) {
            int v = d(rng);
            m = (i % 2) ? m * Mat2(1, v, 0, 1) : m * Mat2(1, 0, v, 1);
        }
        if (d(rng) > 0) m = m * Mat2(0, 1, 1, 0);
        return m;
    };
    for (int i = 0; i < 50; ++i) {
        Mat2 m1 = random_unimodular(), m2 = random_unimodular();
        Frac x = (i % 5 == 0) ? Frac::infinity() : Frac(d(rng), 2);
        CHECK(mobius_apply(m1 * m2, x) == mobius_apply(m1, mobius_apply(m2, x)));
    }
}

TEST_CASE("continued fraction evaluation") {
    CHECK(cf_eval(RegCF{}) == Frac(1, 1));
    CHECK(cf_eval(RegCF{2, 1, 1, 2, 2, 1, 1, 2}) == Frac(194, 75));
    CHECK(cf_eval(RegCF{6, 3, 1, 6, 8, 1, 3, 6}) == Frac(37636, 6013));

    CHECK(matching_count(RegCF{5}) == 5);
    CHECK(matching_count(RegCF{}) == 1);
    CHECK(matching_count(RegCF{2, 1, 1, 2, 2, 1, 1, 2}) == 194);
}

TEST_CASE("continued fraction numerators are matching counts of tails") {
    RegCF cf{3, 1, 4, 1, 5};
    Frac v = cf_eval(cf);
    CHECK(v.num() == matching_count(cf));
    CHECK(v.den() == matching_count(RegCF{1, 4, 1, 5}));
}

TEST_CASE("continuant route equals naive nested evaluation") {
    // Independent oracle: evaluate a1 + 1/(a2 + 1/(...)) bottom-up with
    // exact fraction arithmetic.
    auto naive = [](const RegCF& cf) {
        Frac v(1);
        for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
            if (it == cf.terms.rbegin())
                v = Frac(*it);
            else
                v = Frac(*it * v.num() + v.den(), v.num());
        }
        return v;
    };
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(1, 10), term(1, 7);
    for (int i = 0; i < 200; ++i) {
        std::vector<Int> t;
        int l = len(rng);
        for (int j = 0; j < l; ++j) t.push_back(term(rng));
        RegCF cf(t);
        CHECK(cf_eval(cf) == naive(cf));
    }
}

TEST_CASE("continuant reversal symmetry") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 9), term(1, 6);
    for (int i = 0; i < 100; ++i) {
        std::vector<Int> t;
        int l = len(rng);
        for (int j = 0; j < l; ++j) t.push_back(term(rng));
        RegCF cf(t);
        CHECK(matching_count(cf) == matching_count(cf_reverse(cf)));
    }
}

TEST_CASE("cf normalization identity") {
    RegCF cf{2, 1, 1, 1};
    RegCF n = cf_normalize(cf);
    CHECK(n == RegCF{2, 1, 2});
    CHECK(cf_eval(n) == cf_eval(cf));
    CHECK(cf_normalize(RegCF{3, 2}) == RegCF{3, 2});
}

TEST_CASE("hj evaluation") {
    CHECK(hj_eval(HJChain{4, 2, 2}) == Frac(10, 3));
    CHECK(hj_eval(HJChain{7}) == Frac(7, 1));
    CHECK(hj_eval(HJChain{3, 3, 2, 4, 3, 2}) == Frac(194, 75));

    // Value exceeds 1 whenever all terms are >= 2.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(1, 8), term(2, 5);
    for (int i = 0; i < 100; ++i) {
        std::vector<Int> t;
        int l = len(rng);
        for (int j = 0; j < l; ++j) t.push_back(term(rng));
        Frac v = hj_eval(HJChain(t));
        CHECK(v > Frac(1));
    }
}

TEST_CASE("type invariants are enforced") {
    CHECK_THROWS_AS(RegCF(std::vector<Int>{2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(HJChain(std::vector<Int>{}), std::invalid_argument);
    CHECK_THROWS_AS(HJChain(std::vector<Int>{2, 1}), std::invalid_argument);
}
