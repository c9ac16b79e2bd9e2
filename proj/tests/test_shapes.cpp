#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kr/shapes.hpp"
#include "kr/weyl.hpp"

using namespace kr;

TEST_CASE("partition basics") {
    Partition p{3, 1};
    CHECK(p.size() == 4);
    CHECK(p.length() == 2);
    CHECK(p.conjugate() == Partition{2, 1, 1});
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.col_height(1) == 2);
    CHECK(p.col_height(2) == 1);
    CHECK(p.col_height(4) == 0);
    CHECK(Partition{}.empty());
    CHECK(Partition::parse("3,1") == p);
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition({2, 2, 0}).length() == 2);
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("conjugation involution on all small partitions") {
    for (int m = 0; m <= 8; ++m)
        for (const auto& p : partitions_of(m)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("rectangle lists") {
    RectangleList R{{1, 1}, {1, 1}};
    CHECK(rect_list_size(R) == 2);
    CHECK(rect_list_norm(R) == 1);
    RectangleList R2{{2, 2}, {1, 3}};
    CHECK(rect_list_size(R2) == 7);
    CHECK(rect_list_norm(R2) == 2);
}

TEST_CASE("lr coefficients: stated examples") {
    CHECK(lr_coefficient(Partition{}, Partition{1}, Partition{1}) == 1);
    CHECK(lr_coefficient(Partition{1, 1}, Partition{1}, Partition{2, 1}) == 1);
    CHECK(lr_coefficient(Partition{2}, Partition{2}, Partition{3, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
}

TEST_CASE("multi lr") {
    CHECK(multi_lr({Partition{1}}, Partition{1}) == 1);
    CHECK(multi_lr({Partition{1}, Partition{1}}, Partition{1, 1}) == 1);
    CHECK(multi_lr({Partition{2, 1}, Partition{2, 1}}, Partition{3, 2, 1}) == 2);
}

TEST_CASE("lr symmetry for |nu| <= 8") {
    for (int m = 0; m <= 8; ++m)
        for (const auto& nu : partitions_of(m))
            for (int a = 0; a <= m; ++a)
                for (const auto& d : partitions_of(a))
                    for (const auto& l : partitions_of(m - a)) {
                        CHECK(lr_coefficient(d, l, nu) == lr_coefficient(l, d, nu));
                    }
}

TEST_CASE("lr reproduces GL_6 tensor dimensions for |mu|,|lambda| <= 4") {
    const int n = 6;
    for (int a = 1; a <= 4; ++a)
        for (const auto& mu : partitions_of(a))
            for (int b = 1; b <= 4; ++b)
                for (const auto& lam : partitions_of(b)) {
                    long long lhs = weyl_dimension(Group::GL, n, mu) *
                                    weyl_dimension(Group::GL, n, lam);
                    long long rhs = 0;
                    for (const auto& nu : partitions_of(a + b))
                        rhs += lr_coefficient(mu, lam, nu) * weyl_dimension(Group::GL, n, nu);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("diamond sets") {
    CHECK(in_diamond_set(Kind::Two, Partition{2, 2}));
    CHECK(!in_diamond_set(Kind::OneOne, Partition{2, 1}));
    CHECK(in_diamond_set(Kind::One, Partition{3, 2, 1}));
    CHECK(in_diamond_set(Kind::None, Partition{}));
    CHECK(!in_diamond_set(Kind::None, Partition{1}));
    // conjugation transport
    for (int m = 0; m <= 8; ++m)
        for (const auto& p : partitions_of(m))
            CHECK(in_diamond_set(Kind::Two, p) == in_diamond_set(Kind::OneOne, p.conjugate()));
}

TEST_CASE("kr component shapes") {
    auto s1 = kr_component_shapes(Kind::OneOne, 5, 2, 2);
    CHECK(s1 == std::vector<Partition>{Partition{}, Partition{1, 1}, Partition{2, 2}});
    auto s2 = kr_component_shapes(Kind::Two, 5, 2, 3);
    CHECK(s2 == std::vector<Partition>{Partition{1, 1}, Partition{3, 1}, Partition{3, 3}});
    auto s3 = kr_component_shapes(Kind::None, 5, 2, 3);
    CHECK(s3 == std::vector<Partition>{Partition{3, 3}});
    CHECK_THROWS(kr_component_shapes(Kind::One, 3, 2, 1));
}

TEST_CASE("component sets contain the rectangle and the minimum") {
    for (Kind k : {Kind::One, Kind::Two, Kind::OneOne})
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                auto shapes = kr_component_shapes(k, r + 2, r, s);
                Partition full(std::vector<int>(r, s));
                Partition lmin = lambda_min(k, r, s);
                CHECK(std::count(shapes.begin(), shapes.end(), full) == 1);
                CHECK(std::count(shapes.begin(), shapes.end(), lmin) == 1);
                if (k != Kind::One)
                    for (const auto& lam : shapes) CHECK((r * s - lam.size()) % 2 == 0);
            }
}

TEST_CASE("lambda_min examples") {
    CHECK(lambda_min(Kind::OneOne, 3, 2) == Partition{2});
    CHECK(lambda_min(Kind::Two, 2, 3) == Partition{1, 1});
    CHECK(lambda_min(Kind::One, 2, 2) == Partition{});
}

TEST_CASE("lambda_minus examples and chain length") {
    CHECK(lambda_minus(Kind::OneOne, Partition{2, 2}, 2, 2) == Partition{1, 1});
    CHECK(lambda_minus(Kind::Two, Partition{3, 3}, 2, 3) == Partition{3, 1});
    CHECK(lambda_minus(Kind::One, Partition{1}, 1, 1) == Partition{});
    CHECK_THROWS(lambda_minus(Kind::One, Partition{}, 1, 1));
    for (Kind k : {Kind::One, Kind::Two, Kind::OneOne})
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                Partition lam(std::vector<int>(r, s));
                Partition lmin = lambda_min(k, r, s);
                int steps = 0;
                while (lam != lmin) {
                    lam = lambda_minus(k, lam, r, s);
                    ++steps;
                }
                CHECK(steps == (r * s - lmin.size()) / kind_cells(k));
            }
}

TEST_CASE("rotated complement") {
    CHECK(rotated_complement(Partition{2, 1}, 2, 3) == Partition{2, 1});
    CHECK(rotated_complement(Partition{}, 2, 2) == Partition{2, 2});
}
