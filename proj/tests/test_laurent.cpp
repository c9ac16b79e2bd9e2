#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kr/laurent.hpp"

using namespace kr;

TEST_CASE("laurent arithmetic") {
    Laurent a = Laurent::monomial(1, 0) + Laurent::monomial(2, 1);  // 1 + 2q
    Laurent b = Laurent::monomial(1, -1);                           // q^-1
    CHECK((a * b).to_string() == "q^-1 + 2");
    CHECK((a - a).is_zero());
    CHECK(a.at_one() == 3);
    CHECK(a.coefficient(1) == 2);
    CHECK(a.coefficient(5) == 0);
    CHECK(a.nonnegative());
    CHECK(!(a - Laurent(7)).nonnegative());
}

TEST_CASE("substitution") {
    Laurent a = Laurent::monomial(1, 1) + Laurent::monomial(3, 2);  // q + 3q^2
    CHECK(a.substitute_power(2) == Laurent::monomial(1, 2) + Laurent::monomial(3, 4));
    CHECK(a.substitute_power(-1) == Laurent::monomial(1, -1) + Laurent::monomial(3, -2));
    CHECK(a.substitute_power(1) == a);
    CHECK(a.shifted(3) == Laurent::monomial(1, 4) + Laurent::monomial(3, 5));
    CHECK_THROWS(a.substitute_power(0));
}

TEST_CASE("printing") {
    CHECK(Laurent().to_string() == "0");
    CHECK(Laurent(-2).to_string() == "-2");
    CHECK((Laurent(1) - Laurent::monomial(1, 3)).to_string() == "1 - q^3");
}
