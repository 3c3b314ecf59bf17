#include "gmarkov/cohn.hpp"

#include <doctest.h>
#include <set>
#include <string>

using namespace gmarkov;

TEST_CASE("gc roots match the worked k=1, l=-1 example") {
    MatTriple t = gc_root(1, -1);
    CHECK(t.first == Mat2(-1, 1, -7, 6));
    CHECK(t.second == Mat2(1, 3, 5, 16));
    CHECK(t.third == Mat2(1, 1, 3, 4));
    validate_gc_triple(1, t);

    auto traces = t.traces();
    CHECK(traces == std::array<Int, 3>{5, 17, 5});
    CHECK(is_gsme_solution(1, traces[0], traces[1], traces[2]));

    MatTriple d = gc_dagger_root(1, -1);
    CHECK(d.first == Mat2(-1, 1, -7, 6));
    CHECK(d.second == Mat2(1, 1, 3, 4));
    CHECK(d.third == Mat2(3, 1, 5, 2));
    validate_gc_triple(1, d);
}

TEST_CASE("gc children match the worked example to depth 2") {
    auto [l, r] = gc_children(1, gc_root(1, -1));
    CHECK(l.second == Mat2(3, 13, 17, 74));
    CHECK(r.second == Mat2(9, 13, 47, 68));
    CHECK(r.upper_right() == GMTriple{3, 13, 1});

    auto [ll, lr] = gc_children(1, l);
    auto [rl, rr] = gc_children(1, r);
    CHECK(ll.second == Mat2(13, 61, 75, 352));
    CHECK(lr.second == Mat2(67, 217, 381, 1234));
    CHECK(rl.second == Mat2(149, 217, 791, 1152));
    CHECK(rr.second == Mat2(47, 61, 245, 318));
}

TEST_CASE("tree moves invert each other") {
    // Left child in one tree undoes the left child in the other, and the same
    // on the right; so does the jump pair for the monodromy trees.
    for (Int k : {Int(0), Int(1), Int(3)}) {
        for (const auto& [path, t] : enumerate_mat_tree(MatFamily::GC, k, 1, 3)) {
            CHECK(gc_dagger_children(k, gc_children(k, t).first).first == t);
            CHECK(gc_dagger_children(k, gc_children(k, t).second).second == t);
        }
        for (const auto& [path, t] : enumerate_mat_tree(MatFamily::MM, k, -1, 3)) {
            CHECK(mm_dagger_children(k, mm_children(k, t).first).first == t);
            CHECK(mm_dagger_children(k, mm_children(k, t).second).second == t);
        }
    }
}

TEST_CASE("inverse gc children match the worked example") {
    MatTriple root = gc_dagger_root(1, -1);
    auto [l, r] = gc_dagger_children(1, root);
    CHECK(l == MatTriple{Mat2(-1, 1, -7, 6), Mat2(3, 1, 5, 2), Mat2(13, 3, 17, 4)});
    CHECK(r == MatTriple{Mat2(-5, 3, -37, 22), Mat2(-1, 1, -7, 6), Mat2(3, 1, 5, 2)});
    CHECK(l.upper_right() == GMTriple{1, 1, 3});

    auto [ll, lr] = gc_dagger_children(1, l);
    auto [rl, rr] = gc_dagger_children(1, r);
    CHECK(ll.third == Mat2(61, 13, 75, 16));
    CHECK(lr.first == Mat2(-17, 13, -123, 94));
    CHECK(rl.third == Mat2(55, 13, 93, 22));
    CHECK(rr.first == Mat2(-23, 13, -177, 100));
}

TEST_CASE("mm roots and children match the worked k=1, l=0 example") {
    MatTriple t = mm_root(1, 0);
    CHECK(t.first == Mat2(0, 1, -1, -1));
    CHECK(t.second == Mat2(-2, 3, -1, 1));
    CHECK(t.third == Mat2(-2, 1, -3, 1));
    validate_mm_triple(1, t);

    auto [l, r] = mm_children(1, t);
    CHECK(l.second == Mat2(-4, 13, -1, 3));
    CHECK(r.second == Mat2(-10, 13, -7, 9));

    auto [ll, lr] = mm_children(1, l);
    auto [rl, rr] = mm_children(1, r);
    CHECK(ll.second == Mat2(-14, 61, -3, 13));
    CHECK(lr.second == Mat2(-68, 217, -21, 67));
    CHECK(rl.second == Mat2(-150, 217, -103, 149));
    CHECK(rr.second == Mat2(-48, 61, -37, 47));
}

TEST_CASE("inverse mm tree matches the worked example") {
    MatTriple t = mm_dagger_root(1, 0);
    CHECK(t == MatTriple{Mat2(0, 1, -1, -1), Mat2(-2, 1, -3, 1), Mat2(-4, 1, -13, 3)});
    validate_mm_triple(1, t);

    auto [l, r] = mm_dagger_children(1, t);
    CHECK(l == MatTriple{Mat2(0, 1, -1, -1), Mat2(-4, 1, -13, 3), Mat2(-14, 3, -61, 13)});
    CHECK(r == MatTriple{Mat2(4, 3, -7, -5), Mat2(0, 1, -1, -1), Mat2(-4, 1, -13, 3)});

    auto [ll, lr] = mm_dagger_children(1, l);
    auto [rl, rr] = mm_dagger_children(1, r);
    CHECK(ll.third == Mat2(-62, 13, -291, 61));
    CHECK(lr.first == Mat2(16, 13, -21, -17));
    CHECK(rl.third == Mat2(-56, 13, -237, 55));
    CHECK(rr.first == Mat2(22, 13, -39, -23));
}

TEST_CASE("psi and its inverse") {
    Mat2 x(0, 1, -1, -1);
    Mat2 p = psi(1, x);
    CHECK(p.a12 == 1);
    CHECK(p.trace() == 6 * 1 - 1);
    CHECK(is_gc_matrix(1, p));
    CHECK(psi_inv(1, p) == x);

    // psi_inv . psi is the identity on arbitrary integer matrices.
    int seed = 11;
    for (int i = 0; i < 20; ++i) {
        seed = seed * 31 + 7;
        Mat2 m(seed % 13 - 6, (seed / 3) % 13 - 6, (seed / 7) % 13 - 6, (seed / 11) % 13 - 6);
        for (Int k : {Int(0), Int(1), Int(4)}) {
            CHECK(psi_inv(k, psi(k, m)) == m);
            CHECK(psi(k, psi_inv(k, m)) == m);
        }
    }

    CHECK(psi_triple(1, mm_root(1, 0)) == gc_root(1, 0));
}

TEST_CASE("psi carries the mm trees onto the gc trees addresswise") {
    for (Int k : {Int(0), Int(1), Int(2), Int(3)}) {
        for (Int l : {Int(-2), Int(-1), Int(0), Int(2)}) {
            auto mm = enumerate_mat_tree(MatFamily::MM, k, l, 4);
            auto gc = enumerate_mat_tree(MatFamily::GC, k, -l, 4);
            auto mmd = enumerate_mat_tree(MatFamily::MMD, k, l, 4);
            auto gcd = enumerate_mat_tree(MatFamily::GCD, k, -l, 4);
            REQUIRE(mm.size() == gc.size());
            for (std::size_t i = 0; i < mm.size(); ++i) {
                CHECK(mm[i].first == gc[i].first);
                CHECK(psi_triple(k, mm[i].second) == gc[i].second);
                CHECK(psi_triple(k, mmd[i].second) == gcd[i].second);
            }
        }
    }
}

TEST_CASE("phi sends the inverse mm tree to the gc tree") {
    CHECK(phi_triple(mm_dagger_root(1, 0)) == gc_root(1, 0));
    for (Int k : {Int(0), Int(2)}) {
        for (Int l : {Int(-1), Int(1)}) {
            auto mmd = enumerate_mat_tree(MatFamily::MMD, k, l, 4);
            auto gc = enumerate_mat_tree(MatFamily::GC, k, l, 4);
            for (std::size_t i = 0; i < mmd.size(); ++i) {
                MatTriple img = phi_triple(mmd[i].second);
                CHECK(img == gc[i].second);
                // (1,2)-entries transform by mu.
                CHECK(img.upper_right() == mu(k, mmd[i].second.upper_right()));
            }
        }
    }
}

TEST_CASE("mm decomposition") {
    for (Int k : {Int(0), Int(1), Int(2)}) {
        for (Int l : {Int(-1), Int(0)}) {
            MatTriple root = gc_root(k, l);
            MatTriple d = mm_decompose(k, root);
            // The decomposition of the root is the inverse-tree seed up to sign.
            MatTriple seed = mm_dagger_root(k, l);
            CHECK((d == seed || d == MatTriple{-seed.first, -seed.second, -seed.third}));

            for (const auto& [path, t] : enumerate_mat_tree(MatFamily::GC, k, l, 4)) {
                MatTriple dec = mm_decompose(k, t);
                CHECK(dec.first.a12 > 0);
                CHECK(phi_triple(dec) == t);
                auto tr = dec.traces();
                CHECK(tr[0] == tr[1]);
                CHECK(tr[1] == tr[2]);
            }
        }
    }
}

TEST_CASE("parabolic square-root route matches the decomposition at k=2") {
    for (Int l : {Int(-1), Int(0), Int(1)})
        for (const auto& [path, t] : enumerate_mat_tree(MatFamily::GC, 2, l, 4))
            CHECK(mm_decompose_parabolic(t) == mm_decompose(2, t));
}

TEST_CASE("moebius image ordering on the left subtree") {
    const Frac inf = Frac::infinity();
    for (Int k : {Int(0), Int(1), Int(2)}) {
        for (Int l : {Int(-2), Int(0), Int(1), Int(2)}) {
            std::vector<MatTriple> stack{mm_children(k, mm_root(k, l)).first};
            int seen = 0;
            while (!stack.empty() && seen < 31) {
                MatTriple t = stack.back();
                stack.pop_back();
                ++seen;
                const Mat2 &x = t.first, &y = t.second, &z = t.third;
                if (l <= 0) {
                    Frac zi = mobius_apply(z, inf), yi = mobius_apply(mat_inv(y), inf);
                    REQUIRE_FALSE(zi.is_infinity());
                    REQUIRE_FALSE(yi.is_infinity());
                    CHECK(zi < yi);
                    if (x != x1_mat(k, 0)) {
                        Frac y0 = mobius_apply(y, Frac(0));
                        Frac xi = mobius_apply(mat_inv(x), Frac(0));
                        REQUIRE_FALSE(y0.is_infinity());
                        REQUIRE_FALSE(xi.is_infinity());
                        CHECK(y0 < xi);
                    }
                } else {
                    Frac z0 = mobius_apply(z, Frac(0)), y0 = mobius_apply(mat_inv(y), Frac(0));
                    CHECK(z0 < y0);
                    Frac yi = mobius_apply(y, inf), xi = mobius_apply(mat_inv(x), inf);
                    CHECK(yi < xi);
                }
                auto ch = mm_children(k, t);
                stack.push_back(ch.first);
                stack.push_back(ch.second);
            }
        }
    }
}

TEST_CASE("psi-phi composites square to the identity") {
    for (Int k : {Int(0), Int(1)}) {
        for (const auto& [path, t] : enumerate_mat_tree(MatFamily::MM, k, 1, 4)) {
            MatTriple once = psi_inv_triple(k, phi_triple(t));
            MatTriple twice = psi_inv_triple(k, phi_triple(once));
            CHECK(twice == t);
        }
        for (const auto& [path, t] : enumerate_mat_tree(MatFamily::GC, k, -1, 4)) {
            MatTriple once = phi_triple(psi_inv_triple(k, t));
            MatTriple twice = phi_triple(psi_inv_triple(k, once));
            CHECK(twice == t);
        }
    }
}

TEST_CASE("ell conjugation moves between trees") {
    CHECK(conjugate_ell(gc_root(1, -1), -1, 0) == gc_root(1, 0));
    CHECK(conjugate_ell(mm_root(1, 0), 0, 1) == mm_root(1, 1));
    CHECK(conjugate_ell(mm_root(2, -2), -2, -2) == mm_root(2, -2));
    for (const auto& [path, t] : enumerate_mat_tree(MatFamily::GCD, 1, 2, 3)) {
        MatTriple moved = conjugate_ell(t, 2, -1);
        CHECK(mat_vertex_at(MatFamily::GCD, 1, -1, path) == moved);
    }
}

TEST_CASE("sign pattern of the middle matrix") {
    for (Int k : {Int(0), Int(1), Int(3)}) {
        for (Int l : {Int(-2), Int(0), Int(1), Int(2)}) {
            bool first = true;
            for (const auto& [path, t] : enumerate_mat_tree(MatFamily::MM, k, l, 5)) {
                const Mat2& y = t.second;
                CHECK(y.a21 < 0);
                if (!first) CHECK(y.a11 * y.a22 < 0);
                first = false;
                CHECK(y.a12 > 0);
                if (l >= 1) {
                    CHECK(y.a11 > 0);
                    CHECK(y.a22 < 0);
                } else {
                    CHECK(y.a11 < 0);
                    CHECK(y.a22 > 0);
                }
            }
        }
    }
}

TEST_CASE("second entries are distinct within a tree") {
    for (Int k : {Int(0), Int(1)}) {
        auto verts = enumerate_mat_tree(MatFamily::GC, k, -1, 6);
        std::set<std::string> seen;
        for (const auto& [path, t] : verts) seen.insert(t.second.str());
        CHECK(seen.size() == verts.size());
    }
}

TEST_CASE("braid relation on the two jump operators") {
    // tau1(P,Q,R) = (P,R,P^{-1}(R+S)), tau2(P,Q,R) = (Q,QR-S,R).
    Int k = 1;
    Mat2 s = s_mat(k);
    auto tau1 = [&](const MatTriple& t) {
        return MatTriple{t.first, t.third, mat_inv(t.first) * (t.third + s)};
    };
    auto tau2 = [&](const MatTriple& t) {
        return MatTriple{t.second, t.second * t.third - s, t.third};
    };
    for (const auto& [path, t] : enumerate_mat_tree(MatFamily::GC, k, 0, 3)) {
        MatTriple lhs = tau1(tau2(tau1(t)));
        MatTriple rhs = tau2(tau1(tau2(t)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("triple validators reject corrupted input") {
    MatTriple t = gc_root(0, 0);
    t.second.a11 += 1;
    CHECK_THROWS_AS(validate_gc_triple(0, t), std::invalid_argument);
    MatTriple m = mm_root(0, 0);
    m.third.a12 += 2;
    CHECK_THROWS_AS(validate_mm_triple(0, m), std::invalid_argument);
}
