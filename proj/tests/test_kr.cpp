#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kr/kr.hpp"
#include "kr/weyl.hpp"

using namespace kr;

TEST_CASE("promotion on rectangles") {
    // single box: pr rotates the letter
    Slot b = single_letter_slot(1);
    CHECK(promote_rectangle(b, 4).letters == std::vector<Letter>{2});
    CHECK(promote_rectangle(single_letter_slot(4), 4).letters == std::vector<Letter>{1});
    // one row: content rotates
    Slot row = single_row_slot({1, 1, 2, 2, 4, 4});
    CHECK(promote_rectangle(row, 4).letters == std::vector<Letter>{1, 1, 2, 2, 3, 3});
    // 2x2 block: content (1,2,1) rotates to (1,1,2)
    Slot sq;
    sq.shape = Partition{2, 2};
    sq.letters = {1, 2, 2, 3};
    Slot pr = promote_rectangle(sq, 3);
    CHECK(pr.letters == std::vector<Letter>{1, 2, 3, 3});
}

TEST_CASE("type A KR crystal: structure") {
    auto k = KRCrystal::get(AffineType{Kind::None, 4}, 2, 2);
    CHECK(k->graph.size() == weyl_dimension(Group::GL, 4, Partition{2, 2}));
    CHECK(k->level == 2);
    CHECK(k->graph.connected(k->graph.all_colors_with_zero()));
    // m = u = b(r,s,(s^r)) for type A
    CHECK(k->m_vertex == k->u_vertex);
    CHECK(k->eps0[k->u_vertex] == k->level);
}

TEST_CASE("D-type KR crystal B^{1,1}") {
    auto k = KRCrystal::get(AffineType{Kind::OneOne, 4}, 1, 1);
    CHECK(k->graph.size() == 8);
    CHECK(k->level == 1);
    CHECK(k->component_shapes == std::vector<Partition>{Partition{1}});
    // sigma on B^{1,1}: 1 -> nbar (unique element of weight -eps_n)
    int v1 = k->graph.index_of(Element{{single_letter_slot(1)}});
    int vn = k->graph.index_of(Element{{single_letter_slot(-4)}});
    CHECK(k->sigma_map[v1] == vn);
}

TEST_CASE("D-type KR crystal B^{2,2} of D_5: components and affine checks") {
    auto k = KRCrystal::get(AffineType{Kind::OneOne, 5}, 2, 2);
    long long expect = 0;
    for (const auto& lam : kr_component_shapes(Kind::OneOne, 5, 2, 2))
        expect += weyl_dimension(Group::SO_even, 5, lam);
    CHECK(k->graph.size() == expect);
    CHECK(k->graph.connected(k->graph.all_colors_with_zero()));
    // u, m, m' distinct roles
    CHECK(k->u_vertex == k->b_vertex(Partition{2, 2}));
    CHECK(k->m_vertex == k->b_vertex(Partition{}));
    // sigma is an involution
    for (int v = 0; v < k->graph.size(); ++v) CHECK(k->sigma_map[k->sigma_map[v]] == v);
    // sigma weight rule: wt(sigma b) = bar-reverse of wt(b)
    for (int v = 0; v < k->graph.size(); ++v) {
        auto w = k->graph.weight(v);
        std::vector<int> m(w.size());
        for (size_t i = 0; i < w.size(); ++i) m[i] = -w[w.size() - 1 - i];
        CHECK(k->graph.weight(k->sigma_map[v]) == m);
    }
    // full I-equivariance of sigma
    for (int v = 0; v < k->graph.size(); ++v)
        for (int c = 0; c <= 5; ++c) {
            int sc = sigma_color(k->type, c);
            int w = c == 0 ? k->e0[v] : k->graph.e(c, v);
            int expect_img = w >= 0 ? k->sigma_map[w] : -1;
            int sv = k->sigma_map[v];
            int got = sc == 0 ? k->e0[sv] : k->graph.e(sc, sv);
            CHECK(got == expect_img);
        }
}

TEST_CASE("varsigma commutes with colors 2..n and is an involution") {
    auto k = KRCrystal::get(AffineType{Kind::OneOne, 5}, 2, 2);
    for (int v = 0; v < k->graph.size(); ++v) {
        CHECK(k->varsigma[k->varsigma[v]] == v);
        for (int c = 2; c <= 5; ++c) {
            int w = k->graph.e(c, v);
            int got = k->graph.e(c, k->varsigma[v]);
            CHECK((w >= 0 ? k->varsigma[w] : -1) == got);
        }
    }
}

TEST_CASE("C-type KR crystal B^{1,2} and B^{2,1} of C_4") {
    auto k = KRCrystal::get(AffineType{Kind::Two, 4}, 1, 2);
    long long expect = 0;
    for (const auto& lam : kr_component_shapes(Kind::Two, 4, 1, 2))
        expect += weyl_dimension(Group::Sp, 4, lam);
    CHECK(k->graph.size() == expect);
    CHECK(k->graph.connected(k->graph.all_colors_with_zero()));
    CHECK(k->level == 1);
    CHECK(k->is_perfect);

    auto k2 = KRCrystal::get(AffineType{Kind::Two, 4}, 2, 1);
    CHECK(k2->level == 1);
    CHECK(!k2->is_perfect);
    CHECK(k2->graph.connected(k2->graph.all_colors_with_zero()));
    for (int v = 0; v < k2->graph.size(); ++v) CHECK(k2->sigma_map[k2->sigma_map[v]] == v);
}

TEST_CASE("B-type (kind one) KR crystal B^{1,1} and B^{2,1} of D_5^(2)") {
    auto k = KRCrystal::get(AffineType{Kind::One, 4}, 1, 1);
    CHECK(k->graph.size() == 1 + weyl_dimension(Group::SO_odd, 4, Partition{1}));
    CHECK(k->graph.connected(k->graph.all_colors_with_zero()));
    for (int v = 0; v < k->graph.size(); ++v) CHECK(k->sigma_map[k->sigma_map[v]] == v);

    auto k2 = KRCrystal::get(AffineType{Kind::One, 4}, 2, 1);
    long long expect = 0;
    for (const auto& lam : kr_component_shapes(Kind::One, 4, 2, 1))
        expect += weyl_dimension(Group::SO_odd, 4, lam);
    CHECK(k2->graph.size() == expect);
    CHECK(k2->graph.connected(k2->graph.all_colors_with_zero()));
}

TEST_CASE("level and perfectness across kinds") {
    CHECK(KRCrystal::get(AffineType{Kind::Two, 4}, 1, 3)->level == 2);  // lev(B^{1,3}) C_4 = 2
    CHECK(KRCrystal::get(AffineType{Kind::OneOne, 5}, 1, 2)->level == 2);
    CHECK(KRCrystal::get(AffineType{Kind::One, 4}, 1, 2)->level == 2);
}

TEST_CASE("chain lemma: f-sequences connect b(r,s,lambda^-) to b(r,s,lambda)") {
    // u_{l L0} x b(r,s,l) = f_{a(h)}(u_{l L0} x b(r,s,l^-)) reads on the bare
    // crystal as: applying the written sequence (0; a'(h)) to b(r,s,l^-) with
    // every operator acting on the factor (eps_0 clearing the level en route)
    // yields b(r,s,lambda).
    struct Cs {
        Kind k;
        int n;
    };
    for (auto [kind, n] : {Cs{Kind::OneOne, 5}, Cs{Kind::Two, 4}, Cs{Kind::One, 4}}) {
        for (int r = 1; r <= 2; ++r)
            for (int s = 1; s <= 2; ++s) {
                auto k = KRCrystal::get(AffineType{kind, n}, r, s);
                Partition lmin = lambda_min(kind, r, s);
                for (const auto& lam : k->component_shapes) {
                    if (lam == lmin) continue;
                    Partition prev = lambda_minus(kind, lam, r, s);
                    // h = height of the rightmost differing column
                    int p = 0;
                    for (int c = 1; c <= s; ++c)
                        if (lam.col_height(c) != lmin.col_height(c)) p = c;
                    int h = lam.col_height(p);
                    // written sequence a(h) = (0; a'(h)), applied right to left
                    std::vector<int> apply_order;
                    if (kind == Kind::OneOne) {
                        // a'(h) = (2,3,...,h-1; 1,2,...,h-2)
                        for (int c = h - 2; c >= 1; --c) apply_order.push_back(c);
                        for (int c = h - 1; c >= 2; --c) apply_order.push_back(c);
                    } else if (kind == Kind::One) {
                        for (int c = h - 1; c >= 1; --c) apply_order.push_back(c);
                    } else {
                        for (int c = h - 1; c >= 1; --c) {
                            apply_order.push_back(c);
                            apply_order.push_back(c);
                        }
                    }
                    int v = k->b_vertex(prev);
                    // eps_0 must clear the level so the zero arrow is good.
                    for (int c : apply_order) {
                        v = k->graph.f(c, v);
                        REQUIRE(v >= 0);
                    }
                    REQUIRE(k->eps0[v] >= k->level);
                    v = k->f0[v];
                    REQUIRE(v >= 0);
                    INFO(kind_name(kind), " n=", n, " r=", r, " s=", s, " lambda=",
                         lam.to_string());
                    CHECK(v == k->b_vertex(lam));
                }
            }
    }
}

TEST_CASE("zero-string golden values: max component of D-type B^{r,s}") {
    // alpha columns 1..r, beta columns 2..r+1, gamma columns 3..r+2 in the
    // rectangle component: eps_0 = 2 alpha + beta, phi_0 = 0, and e_0^max is
    // the explicit tableau.
    const int n = 5, r = 2, s = 3;
    auto k = KRCrystal::get(AffineType{Kind::OneOne, n}, r, s);
    for (int alpha = 0; alpha <= s; ++alpha)
        for (int beta = 0; alpha + beta <= s; ++beta) {
            int gamma = s - alpha - beta;
            Slot t;
            t.shape = Partition(std::vector<int>(r, s));
            t.letters.assign(r * s, 0);
            for (int c = 1; c <= s; ++c) {
                int start = c <= alpha ? 1 : (c <= alpha + beta ? 2 : 3);
                for (int row = 1; row <= r; ++row)
                    t.set(row, c, static_cast<Letter>(start + row - 1));
            }
            int v = k->graph.index_of(Element{{t}});
            REQUIRE(v >= 0);
            CHECK(k->eps0[v] == 2 * alpha + beta);
            CHECK(k->phi0[v] == 0);
            // e_0^max: gamma cols 3..r+2, beta cols 3..r+1,1bar, alpha cols
            // 3..r,2bar,1bar
            int x = v;
            while (k->e0[x] >= 0) x = k->e0[x];
            Slot expect;
            expect.shape = t.shape;
            expect.letters.assign(r * s, 0);
            for (int c = 1; c <= s; ++c) {
                std::vector<int> col;
                if (c <= gamma)
                    for (int i = 0; i < r; ++i) col.push_back(3 + i);
                else if (c <= gamma + beta) {
                    for (int i = 0; i < r - 1; ++i) col.push_back(3 + i);
                    col.push_back(-1);
                } else {
                    for (int i = 0; i < r - 2; ++i) col.push_back(3 + i);
                    col.push_back(-2);
                    col.push_back(-1);
                }
                for (int row = 1; row <= r; ++row) expect.set(row, c, static_cast<Letter>(col[row - 1]));
            }
            INFO("alpha=", alpha, " beta=", beta, " gamma=", gamma);
            CHECK(k->graph.element(x) == Element{{expect}});
        }
}

TEST_CASE("rotation rule reproduces the worked 6x7 grid") {
    // P inside the 6x7 rectangle: inner (5,4,3,2,1), mid (6,4,4,3,1),
    // outer (6,6,4,4,1,1), n = 9.
    PMDiagram p{Partition{5, 4, 3, 2, 1}, Partition{6, 4, 4, 3, 1}, Partition{6, 6, 4, 4, 1, 1}};
    REQUIRE(p.valid());
    Element rt = rotation_rule_row_tableau(p, 9, 6, 7);
    auto row = [&](int i) { return rt.slots[i - 1].letters; };
    CHECK(row(1) == std::vector<Letter>{8, 8, 8, 9, -8, -8, -8});
    CHECK(row(2) == std::vector<Letter>{8, 8, 8, -8, -8, -8, -8});
    CHECK(row(3) == std::vector<Letter>{8, 8, 9, -8, -8, -8, -7});
    CHECK(row(4) == std::vector<Letter>{8, -9, -9, -8, -8, -7, -6});
    CHECK(row(5) == std::vector<Letter>{8, 9, -8, -8, -7, -6, -5});
    CHECK(row(6) == std::vector<Letter>{8, -8, -8, -7, -6, -5, -4});
}

TEST_CASE("rotation rule agrees with sigma . phi on B^{2,2} of D_5") {
    const int n = 5, r = 2, s = 2;
    auto k = KRCrystal::get(AffineType{Kind::OneOne, n}, r, s);
    const auto& emb = k->rect_rowtab();
    for (const auto& lamOuter : k->component_shapes) {
        for (const auto& p : diagrams_with_outer(lamOuter)) {
            int v = k->phi_image(p);
            int sv = k->sigma_map[v];
            // sigma(Phi(P)) lies in the rectangle component.
            REQUIRE(emb.forward[sv] >= 0);
            Element via_crystal = emb.image_elements[emb.forward[sv]];
            Element via_rule = rotation_rule_row_tableau(p, n, r, s);
            INFO("P = ", p.to_string());
            CHECK(via_crystal == via_rule);
        }
    }
}
