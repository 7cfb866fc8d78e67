#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cycov/errors.hpp"
#include "cycov/rational.hpp"

#include "test_support.hpp"

using namespace cycov;
using cycov::test::thrown_code;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(BigRational(6, -4) == BigRational(-3, 2));
    CHECK(BigRational(6, -4).to_string() == "-3/2");
    CHECK(BigRational(-6, -4).to_string() == "3/2");
    CHECK(BigRational(0, 7).to_string() == "0");
    CHECK(BigRational(10, 5).to_string() == "2");
    CHECK(thrown_code([] { BigRational(1, 0); }) == errc::division_by_zero);
}

TEST_CASE("parse accepts loose forms") {
    CHECK(BigRational::parse("2/4") == BigRational(1, 2));
    CHECK(BigRational::parse("-2/4") == BigRational(-1, 2));
    CHECK(BigRational::parse("5/-2") == BigRational(-5, 2));
    CHECK(BigRational::parse("007") == BigRational(7));
    CHECK(BigRational::parse("-0") == BigRational(0));
    CHECK(BigRational::parse("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    for (const char* bad : {"", "1/", "/2", "a", "1.5", "1 /2", "--1"})
        CHECK(thrown_code([bad] { BigRational::parse(bad); }) == errc::invalid_rational);
    CHECK(thrown_code([] { BigRational::parse("2/0"); }) == errc::division_by_zero);
}

TEST_CASE("parse_canonical rejects anything but the on-disk form") {
    CHECK(BigRational::parse_canonical("-3/2") == BigRational(-3, 2));
    CHECK(BigRational::parse_canonical("0") == BigRational(0));
    CHECK(BigRational::parse_canonical("5/1") == BigRational(5));
    for (const char* bad :
         {"2/4", "-0", "03", "+1", "5/-2", "1/0", "", "1/", " 1", "1 ", "6/4", "-2/2"})
        CHECK(thrown_code([bad] { BigRational::parse_canonical(bad); }) == errc::invalid_rational);
}

TEST_CASE("to_string round-trips through parse_canonical") {
    const std::vector<BigRational> samples = {
        BigRational(0),      BigRational(-1),     BigRational(7, 3),
        BigRational(-22, 8), BigRational(100, 4), BigRational::parse("-123456789/987654321"),
    };
    for (const auto& q : samples) {
        CHECK(BigRational::parse_canonical(q.to_string()) == q);
        CHECK(BigRational::parse(q.to_string()) == q);
    }
}

TEST_CASE("field arithmetic") {
    const BigRational a(1, 2);
    const BigRational b(-2, 3);
    CHECK(a + b == BigRational(-1, 6));
    CHECK(a - b == BigRational(7, 6));
    CHECK(a * b == BigRational(-1, 3));
    CHECK(a / b == BigRational(-3, 4));
    CHECK(-b == BigRational(2, 3));
    CHECK(thrown_code([&] { return a / BigRational(0); }) == errc::division_by_zero);

    // Exhaustive closure over a small box of reduced fractions.
    for (int n1 = -4; n1 <= 4; ++n1)
        for (int d1 = 1; d1 <= 4; ++d1)
            for (int n2 = -4; n2 <= 4; ++n2)
                for (int d2 = 1; d2 <= 4; ++d2) {
                    const BigRational x(n1, d1);
                    const BigRational y(n2, d2);
                    CHECK(x + y == BigRational(n1 * d2 + n2 * d1, d1 * d2));
                    CHECK(x * y == BigRational(n1 * n2, d1 * d2));
                    CHECK((x - y) + y == x);
                }
}

TEST_CASE("predicates and sign") {
    CHECK(BigRational(0).is_zero());
    CHECK(BigRational(1).is_one());
    CHECK(BigRational(3, 3).is_one());
    CHECK(BigRational(-4, 2).is_integer());
    CHECK(!BigRational(1, 2).is_integer());
    CHECK(BigRational(-5, 7).sign() == -1);
    CHECK(BigRational(0).sign() == 0);
    CHECK(BigRational(5, 7).sign() == 1);
    CHECK(BigRational(-5, 7).abs() == BigRational(5, 7));
}

TEST_CASE("reciprocal and pow") {
    CHECK(BigRational(-2, 3).reciprocal() == BigRational(-3, 2));
    CHECK(thrown_code([] { BigRational(0).reciprocal(); }) == errc::division_by_zero);

    CHECK(BigRational(2, 3).pow(0) == BigRational(1));
    CHECK(BigRational(2, 3).pow(3) == BigRational(8, 27));
    CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
    CHECK(BigRational(-1, 2).pow(5) == BigRational(-1, 32));
    CHECK(BigRational(0).pow(4) == BigRational(0));
    CHECK(thrown_code([] { BigRational(0).pow(-1); }) == errc::division_by_zero);

    // pow agrees with repeated multiplication.
    BigRational acc(1);
    const BigRational base(-3, 5);
    for (int e = 0; e <= 8; ++e) {
        CHECK(base.pow(e) == acc);
        acc *= base;
    }
}

TEST_CASE("to_integer") {
    CHECK(BigRational(-6, 2).to_integer() == -3);
    CHECK(BigRational(0).to_integer() == 0);
    CHECK(thrown_code([] { BigRational(1, 2).to_integer(); }) == errc::inexact_division);
    CHECK(thrown_code([] { BigRational::parse("123456789012345678901234567890").to_integer(); }) ==
          errc::invalid_argument);
}

TEST_CASE("ordering") {
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) < BigRational(-1, 3));
    CHECK(BigRational(2, 4) <= BigRational(1, 2));
    CHECK(BigRational(5) > BigRational(9, 2));
}
