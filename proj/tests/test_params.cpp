#include <catch2/catch_amalgamated.hpp>

#include "rhermite/params.hpp"
#include "rhermite/rational.hpp"

using namespace rhermite;

TEST_CASE("parse_rational round-trips reduced fractions") {
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("+5") == Rational(5));
    CHECK(parse_rational("4/2") == Rational(2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(to_string(Rational(14, 7)) == "2");

    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(floor_div(BigInt(7), BigInt(2)) == 3);
    CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
    CHECK(floor_div(BigInt(-6), BigInt(2)) == -3);
    CHECK(floor_div(BigInt(-1), BigInt(3)) == -1);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_floor(Rational(9, 4)) == 2);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModelParams(2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(0, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(-3, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(1, Rational(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(1, Rational(-1)), std::invalid_argument);
    CHECK_NOTHROW(ModelParams(1, Rational(-49, 100)));

    CHECK(ModelParams(1, Rational(1)).operator_domain_ok());
    CHECK_FALSE(ModelParams(1, Rational(0)).operator_domain_ok());
    CHECK(ModelParams(3, Rational(7, 3)).operator_domain_ok());
    CHECK_FALSE(ModelParams(3, Rational(1)).operator_domain_ok());
    CHECK_FALSE(ModelParams(5, Rational(2)).operator_domain_ok());
}

TEST_CASE("degree splits into quotient, residue, parity") {
    ModelParams p(3, Rational(1));
    DegreeClass dc = p.degree_class(7);
    CHECK(dc.quotient == 2);
    CHECK(dc.residue == 1);
    CHECK(dc.parity == Parity::even_class);
    CHECK(p.degree_class(4).parity == Parity::odd_class);
    CHECK(p.degree_class(0).quotient == 0);
    CHECK_THROWS_AS(p.degree_class(-1), std::invalid_argument);
}

TEST_CASE("slice parameters") {
    CHECK(ModelParams(1, Rational(7, 3)).nu_s(0) == Rational(7, 3));
    CHECK(ModelParams(3, Rational(1)).nu_s(0) == Rational(0));
    CHECK(ModelParams(3, Rational(2)).nu_s(1) == Rational(2, 3));
    CHECK_THROWS_AS(ModelParams(3, Rational(1)).nu_s(3), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(3, Rational(1)).nu_s(-1), std::invalid_argument);

    // Slice parameters exceed -1/2 whenever nu does.
    for (int r : {1, 3, 5, 7})
        for (Rational nu : {Rational(0), Rational(1, 2), Rational(7, 3), Rational(-49, 100)}) {
            ModelParams q(r, nu);
            for (int s = 0; s < r; ++s) CHECK(2 * q.nu_s(s) > -1);
        }
}

TEST_CASE("parity shift") {
    CHECK(ModelParams(3, Rational(1)).vartheta(6) == Rational(0));
    CHECK(ModelParams(3, Rational(1)).vartheta(4) == Rational(2, 3));
    ModelParams line(1, Rational(7, 3));
    for (int n = 1; n <= 9; n += 2) CHECK(line.vartheta(n) == Rational(14, 3));
    for (int n = 0; n <= 8; n += 2) CHECK(line.vartheta(n) == Rational(0));
}

TEST_CASE("deformed numbers") {
    ModelParams p(3, Rational(2));
    CHECK(p.deformed_number(0) == Rational(0));
    CHECK(p.deformed_number(7) == Rational(2));
    CHECK(p.deformed_number(10) == Rational(13, 3));

    for (int r : {1, 3, 5})
        for (Rational nu : {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)}) {
            ModelParams q(r, nu);
            for (int N = 0; N <= 200; ++N) {
                // Zero exactly below the first rung.
                CHECK((q.deformed_number(N) == 0) == (N < r));
                // Stepping by r adds 1 and toggles the parity shift.
                Rational step = q.deformed_number(N + r) - q.deformed_number(N);
                Rational swing = q.vartheta(N + r) - q.vartheta(N);
                CHECK(step == 1 + swing);
            }
        }
}

TEST_CASE("deformed factorial telescopes") {
    ModelParams p(3, Rational(1));
    CHECK(p.deformed_factorial(0) == Rational(1));
    CHECK(p.deformed_factorial(2) == Rational(1));
    CHECK(p.deformed_factorial(6) == Rational(2));

    ModelParams line(1, Rational(0));
    for (int n = 0; n <= 12; ++n)
        CHECK(line.deformed_factorial(n) == Rational(factorial(n)));

    for (int r : {1, 3, 5})
        for (Rational nu : {Rational(1, 2), Rational(7, 3)}) {
            ModelParams q(r, nu);
            for (int N = r; N <= 200; ++N)
                CHECK(q.deformed_factorial(N) ==
                      q.deformed_number(N) * q.deformed_factorial(N - r));
        }
}
