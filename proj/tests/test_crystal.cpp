#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kr/cartan.hpp"
#include "kr/crystal.hpp"
#include "kr/weyl.hpp"

using namespace kr;

namespace {

Element one_letter(int x) { return Element{{single_letter_slot(x)}}; }

char fam_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

}  // namespace

TEST_CASE("vector crystal type A chain") {
    ClassicalType t{Family::A, 3};
    CHECK(f_letter(t, 1, 1) == 2);
    CHECK(f_letter(t, 2, 2) == 3);
    CHECK(f_letter(t, 1, 3) == kNoLetter);
    auto g = vector_crystal(t);
    CHECK(g.size() == 3);
}

TEST_CASE("vector crystal type D fork") {
    ClassicalType t{Family::D, 4};
    CHECK(f_letter(t, 4, 3) == -4);
    CHECK(f_letter(t, 4, 4) == -3);
    CHECK(f_letter(t, 3, 3) == 4);
    CHECK(f_letter(t, 3, -4) == -3);
    auto g = vector_crystal(t);
    CHECK(g.size() == 8);
    // W_0-symmetric character: weights come in +- pairs.
    int plus = 0, minus = 0;
    for (int v = 0; v < g.size(); ++v) {
        auto w = g.weight(v);
        for (int x : w) {
            if (x > 0) ++plus;
            if (x < 0) ++minus;
        }
    }
    CHECK(plus == minus);
}

TEST_CASE("vector crystal type B middle letter") {
    ClassicalType t{Family::B, 2};
    auto g = vector_crystal(t);
    CHECK(g.size() == 5);
    Element zero = one_letter(0);
    int v = g.index_of(zero);
    REQUIRE(v >= 0);
    CHECK(g.eps(2, v) == 1);
    CHECK(g.phi(2, v) == 1);
    CHECK(pair_coroot(AffineType{Kind::One, 2}, 2, g.weight(v)) == 0);
}

TEST_CASE("two-factor tensor rule matches Kashiwara convention") {
    ClassicalType t{Family::A, 3};
    Element e12{{single_letter_slot(1), single_letter_slot(2)}};
    Element e21{{single_letter_slot(2), single_letter_slot(1)}};
    CHECK(!apply_e(t, 1, e12).has_value());
    auto up = apply_e(t, 1, e21);
    REQUIRE(up.has_value());
    CHECK(up->slots[0].letters[0] == 1);
    CHECK(up->slots[1].letters[0] == 1);
    // f on 1 (x) 1 acts on the left factor.
    Element e11{{single_letter_slot(1), single_letter_slot(1)}};
    auto dn = apply_f(t, 1, e11);
    REQUIRE(dn.has_value());
    CHECK(dn->slots[0].letters[0] == 2);
    CHECK(dn->slots[1].letters[0] == 1);
    // e on 2 (x) 2 acts on the right factor.
    Element e22{{single_letter_slot(2), single_letter_slot(2)}};
    auto up2 = apply_e(t, 1, e22);
    REQUIRE(up2.has_value());
    CHECK(up2->slots[0].letters[0] == 2);
    CHECK(up2->slots[1].letters[0] == 1);
}

TEST_CASE("single column tableau f_1 on [1;2] dies") {
    ClassicalType t{Family::A, 3};
    Element col{{highest_weight_tableau(Partition{1, 1})}};
    CHECK(!apply_f(t, 1, col).has_value());
    CHECK(!apply_e(t, 1, col).has_value());
}

TEST_CASE("component sizes match the Weyl dimension oracle") {
    // seed = highest tableau: B((1)) C_3 -> 6; 1 in A_2 -> 3; B((1,1)) D_4 -> 28.
    CHECK(classical_crystal({Family::C, 3}, Partition{1}).size() == 6);
    CHECK(classical_crystal({Family::A, 3}, Partition{1}).size() == 3);
    CHECK(classical_crystal({Family::D, 4}, Partition{1, 1}).size() == 28);
}

TEST_CASE("dimension oracle across families, |lambda| <= 6, n <= 5") {
    struct Case {
        Family fam;
        int n;
    };
    for (const Case& c : {Case{Family::A, 3}, Case{Family::A, 4}, Case{Family::B, 2},
                          Case{Family::B, 3}, Case{Family::C, 2}, Case{Family::C, 3},
                          Case{Family::D, 4}, Case{Family::D, 5}}) {
        ClassicalType t{c.fam, c.n};
        int maxrows = c.fam == Family::A ? c.n : c.n - (c.fam == Family::D ? 2 : 1);
        for (int m = 1; m <= 5; ++m) {
            for (const auto& lam : partitions_of(m)) {
                if (lam.length() > maxrows) continue;
                if (lam.size() > 5 && c.n > 4) continue;
                auto g = classical_crystal(t, lam);
                long long dim = weyl_dimension_family(fam_char(c.fam), c.n, lam);
                INFO(fam_char(c.fam), c.n, " lambda=", lam.to_string());
                CHECK(g.size() == dim);
            }
        }
    }
}

TEST_CASE("string axioms on a generated graph") {
    ClassicalType t{Family::B, 3};
    auto g = classical_crystal(t, Partition{2, 1});
    AffineType at{Kind::One, 3};
    for (int v = 0; v < g.size(); ++v)
        for (int c = 1; c <= 3; ++c) {
            CHECK(g.phi(c, v) - g.eps(c, v) == pair_coroot(at, c, g.weight(v)));
            int w = g.f(c, v);
            if (w >= 0) CHECK(g.e(c, w) == v);
        }
}

TEST_CASE("character is W_0 invariant (simple reflection fixes weight multiset)") {
    ClassicalType t{Family::C, 3};
    auto g = classical_crystal(t, Partition{2, 1});
    AffineType at{Kind::Two, 3};
    for (int color = 1; color <= 3; ++color) {
        std::multiset<std::vector<int>> before, after;
        for (int v = 0; v < g.size(); ++v) {
            auto w = g.weight(v);
            before.insert(w);
            int pairing = pair_coroot(at, color, w);
            // apply s_color: w - <a^,w> alpha
            std::vector<int> alpha(3, 0);
            if (color < 3) {
                alpha[color - 1] = 1;
                alpha[color] = -1;
            } else {
                alpha[2] = 2;
            }
            for (int i = 0; i < 3; ++i) w[i] -= pairing * alpha[i];
            after.insert(w);
        }
        CHECK(before == after);
    }
}

TEST_CASE("tensor associativity") {
    ClassicalType t{Family::A, 3};
    // Regrouping is trivial in the flattened-slot encoding; check that ops on
    // a 3-slot element match applying the 2-factor rule twice.
    Element abc{{single_letter_slot(1), single_letter_slot(2), single_letter_slot(1)}};
    for (int c = 1; c <= 2; ++c) {
        auto direct = apply_f(t, c, abc);
        // group (1x2)x3: treat first two slots as one element
        Element left{{abc.slots[0], abc.slots[1]}};
        Element right{{abc.slots[2]}};
        int phiL = phi_classical(t, c, left);
        int epsR = eps_classical(t, c, right);
        std::optional<Element> expect;
        if (phiL > epsR) {
            if (auto fl = apply_f(t, c, left)) expect = Element{{fl->slots[0], fl->slots[1], right.slots[0]}};
        } else {
            if (auto fr = apply_f(t, c, right)) expect = Element{{left.slots[0], left.slots[1], fr->slots[0]}};
        }
        CHECK(direct.has_value() == expect.has_value());
        if (direct && expect) CHECK(*direct == *expect);
    }
}

TEST_CASE("highest weight vertices of small tensors") {
    ClassicalType t{Family::A, 3};
    std::vector<Element> seeds;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            seeds.push_back(Element{{single_letter_slot(a), single_letter_slot(b)}});
    auto g = CrystalGraph::generate(t, seeds, {1, 2});
    CHECK(g.size() == 9);
    auto hw = g.highest_vertices({1, 2});
    REQUIRE(hw.size() == 2);
    std::multiset<std::vector<int>> wts;
    for (int v : hw) wts.insert(g.weight(v));
    CHECK(wts.count({2, 0, 0}) == 1);
    CHECK(wts.count({1, 1, 0}) == 1);
}

TEST_CASE("tensor highest-weight factor lemma on small products") {
    ClassicalType t{Family::C, 2};
    std::vector<Element> seeds;
    for (int a : {1, 2, -2, -1})
        for (int b : {1, 2, -2, -1})
            seeds.push_back(Element{{single_letter_slot(a), single_letter_slot(b)}});
    auto g = CrystalGraph::generate(t, seeds, {1, 2});
    for (int hw : g.highest_vertices({1, 2})) {
        Element c = g.element(hw);
        Element c1{{c.slots[0]}};
        CHECK(!apply_e(t, 1, c1).has_value());
        CHECK(!apply_e(t, 2, c1).has_value());
        // every b1 (x) b2 in the component has b1 in the component of c1
        auto comp = g.component({1, 2}, hw);
        auto g1 = CrystalGraph::generate(t, {c1}, {1, 2});
        for (int v : comp) {
            Element b1{{g.element(v).slots[0]}};
            CHECK(g1.index_of(b1) >= 0);
        }
    }
}
