#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fanolink/rational.hpp>

using namespace fanolink;

TEST_CASE("rationals are canonical") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(2, 4).get_den() == 2);
    CHECK(rat(0, 7) == 0);
    CHECK_THROWS_AS(rat(1, 0), DegeneracyError);
}

TEST_CASE("string round trip") {
    CHECK(rat_to_string(rat(-7, 3)) == "-7/3");
    CHECK(rat_to_string(rat(5)) == "5");
    CHECK(rat_from_string("22/7") == rat(22, 7));
    CHECK(rat_from_string(rat_to_string(rat(-1234, 5678))) == rat(-1234, 5678));
    CHECK_THROWS_AS(rat_from_string("x"), StructuralError);
}

TEST_CASE("powers, including negative exponents") {
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(5), 0) == 1);
    CHECK_THROWS_AS(rat_pow(rat(0), -1), DegeneracyError);
}

TEST_CASE("no machine overflow on products") {
    Rational big = rat_pow(rat(10), 40);
    CHECK(big * big == rat_pow(rat(10), 80));
    CHECK(to_long(rat(14)) == 14);
    CHECK_THROWS_AS(to_long(rat(1, 2)), StructuralError);
    CHECK_THROWS_AS(to_long(big), StructuralError);
}
