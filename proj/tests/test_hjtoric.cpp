#include "gmarkov/wahl.hpp"

#include <doctest.h>
#include <random>

using namespace gmarkov;

namespace {

std::vector<Frac> proper_fractions(int max_den) {
    std::vector<Frac> out;
    for (int b = 2; b <= max_den; ++b)
        for (int a = 1; a < b; ++a)
            if (gcd(a, b) == 1) out.push_back(Frac(a, b));
    return out;
}

} // namespace

TEST_CASE("hj expansion") {
    CHECK(hj_expand(10, 3) == HJChain{4, 2, 2});
    CHECK(hj_expand(194, 75) == HJChain{3, 3, 2, 4, 3, 2});
    CHECK(hj_expand(5, 2) == HJChain{3, 2});
    CHECK(hj_expand(7, 1) == HJChain{7});
    CHECK_THROWS_AS(hj_expand(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(hj_expand(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(hj_expand(3, 5), std::invalid_argument);
}

TEST_CASE("hj expansion round-trips through evaluation") {
    for (int r = 2; r <= 400; ++r)
        for (int a = 1; a < r; ++a) {
            if (gcd(r, a) != 1) continue;
            CHECK(hj_eval(hj_expand(r, a)) == Frac(r, a));
        }
    // Sparse sweep of the larger range.
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        int r = std::uniform_int_distribution<int>(400, 10000)(rng);
        int a = std::uniform_int_distribution<int>(1, r - 1)(rng);
        int g = static_cast<int>(gcd(r, a).get_si());
        r /= g;
        a /= g;
        if (r < 2) continue;
        CHECK(hj_eval(hj_expand(r, a)) == Frac(r, a));
    }
}

TEST_CASE("regular to hj conversion") {
    CHECK(cf_to_hj(RegCF{2, 1, 1, 2, 2, 1, 1, 2}) == HJChain{3, 3, 2, 4, 3, 2});
    CHECK(cf_to_hj(RegCF{2, 2}) == HJChain{3, 2});
    CHECK(hj_eval(cf_to_hj(RegCF{2, 2})) == Frac(5, 2));
    for (Int k : {Int(0), Int(1), Int(3)})
        CHECK(cf_to_hj(RegCF{k + 1, 1}) == HJChain{std::vector<Int>{k + 2}});
    CHECK_THROWS_AS(cf_to_hj(RegCF{1}), std::invalid_argument);
    CHECK_THROWS_AS(cf_to_hj(RegCF{}), std::invalid_argument);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> len(1, 9), term(1, 5);
    int done = 0;
    while (done < 200) {
        std::vector<Int> t;
        int l = len(rng);
        for (int j = 0; j < l; ++j) t.push_back(term(rng));
        RegCF cf(t);
        if (!(cf_eval(cf) > Frac(1))) continue;
        CHECK(hj_eval(cf_to_hj(cf)) == cf_eval(cf));
        ++done;
    }
}

TEST_CASE("wahl chain recognition") {
    CHECK(is_k_wahl(HJChain{3, 3, 2, 4, 3, 2}, 0));
    CHECK(is_k_wahl(HJChain{4, 2, 2}, 0));
    CHECK_FALSE(is_gm_number(0, 10));
    for (Int k : {Int(0), Int(1), Int(2), Int(5)}) {
        CHECK(is_k_wahl(HJChain{std::vector<Int>{k + 2}}, k));
        CHECK_FALSE(is_k_wahl(HJChain{std::vector<Int>{k + 3}}, k));
    }
    CHECK_FALSE(is_k_wahl(HJChain{2, 2}, 0));
    CHECK(is_dual_k_wahl(HJChain{2, 2}, 1));
    CHECK(is_dual_k_wahl(HJChain{2, 2, 2, 4}, 1)); // 13/10, the u- chain at k=1, t=1/2
    CHECK_FALSE(is_dual_k_wahl(HJChain{3, 2, 3, 2, 2}, 1));
    CHECK_FALSE(is_dual_k_wahl(HJChain{3, 3}, 1));
}

TEST_CASE("f_minus and g_minus") {
    CHECK(f_minus(0, Frac(2, 5)) == HJChain{3, 3, 2, 4, 3, 2});
    CHECK(f_minus(0, Frac(1, 3)) == HJChain{3, 3, 2});
    CHECK(hj_eval(f_minus(0, Frac(1, 3))) == Frac(13, 5));
    CHECK(f_minus(0, Frac(1, 2)) == g_minus(0, Frac(1, 2)));
    CHECK(f_minus(0, Frac(1, 2)) == HJChain{3, 2});

    for (Int k : {Int(0), Int(1), Int(2), Int(3)}) {
        for (const Frac& t : proper_fractions(13)) {
            CharNumbers cn = char_numbers(k, t);
            HJChain f = f_minus(k, t);
            CHECK(hj_eval(f) == Frac(cn.m, cn.u_plus));
            CHECK(hj_eval(g_minus(k, t)) == Frac(cn.m, cn.v_minus));
            CHECK(is_k_wahl(f, k));
            CHECK(is_dual_k_wahl(hj_expand(cn.m, cn.u_minus), k));
        }
    }
}

TEST_CASE("composition of chains along farey triples") {
    CHECK(compose(0, Frac(1, 3), Frac(1, 2)) == HJChain{3, 3, 2, 4, 3, 2});
    CHECK(compose(0, Frac(1, 3), Frac(1, 2)) == f_minus(0, Frac(2, 5)));
    CHECK(compose(1, Frac(1, 3), Frac(1, 2)) == f_minus(1, Frac(2, 5)));
    CHECK(hj_eval(compose(1, Frac(1, 3), Frac(1, 2))) == Frac(4683, 1075));

    // Index-two branch, both routes.
    for (Int k : {Int(0), Int(1)})
        for (Int a : {Int(2), Int(3)})
            CHECK(compose(k, Frac(0, 1), Frac(1, a + 1)) == f_minus(k, Frac(1, a + 2)));

    for (Int k : {Int(0), Int(1), Int(2)}) {
        for (const Frac& t : proper_fractions(13)) {
            FareyTriple f = farey_parents(t);
            CHECK(compose(k, f.r, f.s) == f_minus(k, t));
        }
    }
}

TEST_CASE("hilbert bases") {
    HilbertBasis hb = hilbert_basis(ConeData(5, 2));
    REQUIRE(hb.vectors.size() == 4);
    CHECK(hb.vectors[0] == std::array<Int, 2>{0, 1});
    CHECK(hb.vectors[1] == std::array<Int, 2>{1, 0});
    CHECK(hb.vectors[2] == std::array<Int, 2>{3, -1});
    CHECK(hb.vectors[3] == std::array<Int, 2>{5, -2});
    CHECK(hb.chain == HJChain{3, 2});

    // A_{r-1} case: r/(r-1) = [[2,...,2]].
    for (int r : {2, 3, 7, 11}) {
        HilbertBasis a = hilbert_basis(ConeData(r, r - 1));
        CHECK(a.chain.size() == static_cast<std::size_t>(r - 1));
        for (const Int& b : a.chain.terms) CHECK(b == 2);
        for (int i = 0; i <= r; ++i)
            CHECK(a.vectors[static_cast<std::size_t>(i)] ==
                  std::array<Int, 2>{i, 1 - i});
    }

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> rd(2, 2000);
    int done = 0;
    while (done < 60) {
        int r = rd(rng);
        std::uniform_int_distribution<int> ad(1, r - 1);
        int a = ad(rng);
        if (gcd(r, a) != 1) continue;
        HilbertBasis hb2 = hilbert_basis(ConeData(r, a));
        REQUIRE(hb2.vectors.size() == hb2.chain.size() + 2);
        for (std::size_t i = 0; i + 1 < hb2.vectors.size(); ++i) {
            Int det = hb2.vectors[i][0] * hb2.vectors[i + 1][1] -
                      hb2.vectors[i][1] * hb2.vectors[i + 1][0];
            CHECK((det == 1 || det == -1));
        }
        for (std::size_t i = 1; i + 1 < hb2.vectors.size(); ++i) {
            CHECK(hb2.vectors[i - 1][0] + hb2.vectors[i + 1][0] ==
                  hb2.chain.terms[i - 1] * hb2.vectors[i][0]);
            CHECK(hb2.vectors[i - 1][1] + hb2.vectors[i + 1][1] ==
                  hb2.chain.terms[i - 1] * hb2.vectors[i][1]);
        }
        ++done;
    }

    // Dual basis comes from the expansion of r/(r-a).
    HilbertBasis dual = hilbert_basis(ConeData(10, 10 - 3));
    CHECK(dual.chain == hj_expand(10, 7));
}

TEST_CASE("singularity reports") {
    SingularityReport rep = gm_singularity(2, Frac(1, 2));
    CHECK(rep.m == 25);
    CHECK(rep.cn.u_plus == 4);
    REQUIRE(rep.class_t_m0.has_value());
    CHECK(*rep.class_t_m0 == 5);
    CHECK(*rep.class_t_a == 1);
    CHECK(rep.u_plus_is_wahl);
    CHECK(rep.u_minus_is_dual_wahl);

    SingularityReport r2 = gm_singularity(0, Frac(2, 5));
    CHECK(r2.chain_u_plus == HJChain{3, 3, 2, 4, 3, 2});
    CHECK(r2.u_plus_is_wahl);
    CHECK_FALSE(r2.class_t_m0.has_value());

    SingularityReport r3 = gm_singularity(1, Frac(1, 2));
    CHECK(is_dual_k_wahl(r3.chain_u_minus, 1));

    // k = 2 class-T certificate across a small sweep.
    for (const Frac& t : proper_fractions(9)) {
        SingularityReport r = gm_singularity(2, t);
        REQUIRE(r.class_t_m0.has_value());
        CHECK(*r.class_t_m0 * *r.class_t_m0 == r.m);
        CHECK((r.cn.u_plus + 1) % *r.class_t_m0 == 0);
    }
}
