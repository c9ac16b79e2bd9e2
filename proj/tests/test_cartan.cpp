#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kr/cartan.hpp"

using namespace kr;

TEST_CASE("marks and comarks from null vectors") {
    AffineType d5{Kind::OneOne, 5};  // D_5^(1)
    auto a = d5.marks();
    auto av = d5.comarks();
    CHECK(a == std::vector<int>{1, 1, 2, 2, 1, 1});
    CHECK(av == std::vector<int>{1, 1, 2, 2, 1, 1});

    AffineType c4{Kind::Two, 4};  // C_4^(1)
    CHECK(c4.marks() == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(c4.comarks() == std::vector<int>{1, 1, 1, 1, 1});

    AffineType b4{Kind::One, 4};  // D_5^(2)
    CHECK(b4.marks() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(b4.comarks() == std::vector<int>{1, 2, 2, 2, 1});

    AffineType a4{Kind::None, 5};  // A_4^(1)
    CHECK(a4.marks() == std::vector<int>(5, 1));
    CHECK(a4.comarks() == std::vector<int>(5, 1));
}

TEST_CASE("c_r and levels") {
    AffineType c4{Kind::Two, 4};
    CHECK(c4.c_r(1) == 2);
    CHECK(c4.c_r(3) == 2);
    CHECK(c4.level(1, 3) == 2);  // ceil(3/2)
    CHECK(!c4.perfect(1, 3));
    CHECK(c4.perfect(1, 2));

    AffineType d5{Kind::OneOne, 5};
    CHECK(d5.c_r(2) == 1);
    CHECK(d5.level(2, 3) == 3);
    CHECK(d5.perfect(2, 3));

    AffineType b4{Kind::One, 4};
    CHECK(b4.c_r(2) == 1);
    CHECK(b4.level(2, 3) == 3);
}

TEST_CASE("theta over a0") {
    AffineType d5{Kind::OneOne, 5};
    CHECK(d5.theta_over_a0() == std::vector<int>{1, 1, 0, 0, 0});
    AffineType c4{Kind::Two, 4};
    CHECK(c4.theta_over_a0() == std::vector<int>{2, 0, 0, 0});
    AffineType b4{Kind::One, 4};
    CHECK(b4.theta_over_a0() == std::vector<int>{1, 0, 0, 0});
    AffineType a4{Kind::None, 5};
    CHECK(a4.theta_over_a0() == std::vector<int>{1, 0, 0, 0, -1});
}

TEST_CASE("names") {
    CHECK(AffineType{Kind::OneOne, 5}.name() == "D5(1)");
    CHECK(AffineType{Kind::Two, 4}.name() == "C4(1)");
    CHECK(AffineType{Kind::One, 4}.name() == "D5(2)");
    CHECK(AffineType{Kind::None, 5}.name() == "A4(1)");
}
