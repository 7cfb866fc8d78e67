#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cycov/curves.hpp"
#include "cycov/errors.hpp"

#include "test_support.hpp"

using namespace cycov;
using cycov::test::anchor_d2;
using cycov::test::anchor_d3;
using cycov::test::ev;
using cycov::test::grid_curve;
using cycov::test::make_curve;
using cycov::test::thrown_code;

TEST_CASE("valid curves") {
    const auto c3 = anchor_d3();
    CHECK(c3.degree().value() == 3);
    CHECK(c3.branch_count() == 4);
    CHECK(c3.alpha() == ev(3, {1, 1, 2, 2}));
    CHECK(c3.branch_points()[3] == BigRational(5, 2));

    const auto c2 = anchor_d2();
    CHECK(c2.degree().value() == 2);
    CHECK(c2.branch_count() == 6);
    CHECK(c2.alpha() == ev(2, {1, 1, 1, 1, 1, 1}));

    // Raw exponents reduce mod d before validation: 4 = 1, 5 = 2 mod 3.
    const auto reduced = make_curve(3, {"0", "1", "2", "3"}, {4, 4, 5, 5});
    CHECK(reduced.alpha() == ev(3, {1, 1, 2, 2}));
}

TEST_CASE("curve validation errors") {
    CHECK(thrown_code([] { make_curve(4, {"0", "1", "2", "3"}, {1, 1, 1, 1}); }) ==
          errc::non_prime_degree);
    CHECK(thrown_code([] { make_curve(3, {"0", "1", "1", "2"}, {1, 1, 2, 2}); }) ==
          errc::duplicate_branch_points);
    CHECK(thrown_code([] { make_curve(3, {"0", "2/4"}, {1, 2}); }) ==
          errc::too_few_branch_points);
    CHECK(thrown_code([] { make_curve(3, {"0", "1", "2", "3"}, {1, 0, 2, 2}); }) ==
          errc::zero_exponent);
    CHECK(thrown_code([] { make_curve(3, {"0", "1", "2", "3"}, {1, 3, 2, 2}); }) ==
          errc::zero_exponent);
    CHECK(thrown_code([] { make_curve(3, {"0", "1", "2", "3"}, {1, 1, 1, 1}); }) ==
          errc::ramified_at_infinity);
    CHECK(thrown_code([] { make_curve(3, {"0", "1", "2", "3"}, {1, 1, 2, 2, 2}); }) ==
          errc::length_mismatch);
    CHECK(thrown_code([] { make_curve(2, {"0", "1", "2", "3", "4"}, {1, 1, 1, 1, 1}); }) ==
          errc::ramified_at_infinity);
}

TEST_CASE("ramification profile of a cyclic map") {
    SUBCASE("full support, d = 3") {
        const auto p = ramification_profile(PrimeDegree(3), ev(3, {1, 1, 2, 2}));
        CHECK(p.degree == 3);
        REQUIRE(p.finite.size() == 4);
        for (const auto& entry : p.finite) {
            REQUIRE(entry.size() == 1);
            CHECK(entry[0] == std::pair<int, int>{1, 3});
        }
        REQUIRE(p.at_infinity.size() == 1);
        CHECK(p.at_infinity[0] == std::pair<int, int>{3, 1});
    }

    SUBCASE("partial support, d = 2") {
        const auto p = ramification_profile(PrimeDegree(2), ev(2, {1, 1, 0, 0}));
        CHECK(p.degree == 2);
        REQUIRE(p.finite.size() == 4);
        CHECK(p.finite[0][0] == std::pair<int, int>{1, 2});
        CHECK(p.finite[1][0] == std::pair<int, int>{1, 2});
        CHECK(p.finite[2][0] == std::pair<int, int>{2, 1});
        CHECK(p.finite[3][0] == std::pair<int, int>{2, 1});
        CHECK(p.at_infinity[0] == std::pair<int, int>{2, 1});
    }

    SUBCASE("rejects vectors outside the hyperplane") {
        CHECK(thrown_code([] { ramification_profile(PrimeDegree(3), ev(3, {1, 1, 2, 1})); }) ==
              errc::not_degree_zero);
        CHECK(thrown_code([] { ramification_profile(PrimeDegree(5), ev(3, {1, 1, 1, 0})); }) ==
              errc::modulus_mismatch);
    }
}

TEST_CASE("genus_from_profile") {
    CHECK(genus_from_profile(ramification_profile(PrimeDegree(3), ev(3, {1, 1, 2, 2}))) == 2);
    CHECK(genus_from_profile(ramification_profile(PrimeDegree(2), ev(2, {1, 1, 0, 0}))) == 0);
    CHECK(genus_from_profile(ramification_profile(PrimeDegree(2), ev(2, {1, 1, 1, 1}))) == 1);

    SUBCASE("hand-built profiles") {
        RamificationProfile unramified_line;
        unramified_line.degree = 1;
        unramified_line.at_infinity = {{1, 1}};
        CHECK(genus_from_profile(unramified_line) == 0);

        // Totally ramified degree-5 map with 4 branch values: 2g - 2 = -10 + 16.
        RamificationProfile p;
        p.degree = 5;
        p.finite = {{{1, 5}}, {{1, 5}}, {{1, 5}}, {{1, 5}}};
        p.at_infinity = {{5, 1}};
        CHECK(genus_from_profile(p) == 4);
    }

    SUBCASE("invalid profiles") {
        RamificationProfile bad_sum;
        bad_sum.degree = 2;
        bad_sum.finite = {{{1, 1}}};
        bad_sum.at_infinity = {{2, 1}};
        CHECK(thrown_code([&] { genus_from_profile(bad_sum); }) == errc::invalid_profile);

        // Degree 3, one totally ramified point: the genus formula goes negative.
        RamificationProfile negative;
        negative.degree = 3;
        negative.finite = {{{1, 3}}};
        negative.at_infinity = {{3, 1}};
        CHECK(thrown_code([&] { genus_from_profile(negative); }) == errc::invalid_profile);

        // 2g - 2 = -4 + 1 is odd.
        RamificationProfile odd_sum;
        odd_sum.degree = 2;
        odd_sum.finite = {{{1, 2}}, {{2, 1}}, {{2, 1}}};
        odd_sum.at_infinity = {{2, 1}};
        CHECK(thrown_code([&] { genus_from_profile(odd_sum); }) == errc::invalid_profile);

        RamificationProfile zero_counts;
        zero_counts.degree = 2;
        zero_counts.finite = {{{0, 2}}};
        zero_counts.at_infinity = {{2, 1}};
        CHECK(thrown_code([&] { genus_from_profile(zero_counts); }) == errc::invalid_profile);

        RamificationProfile nonpositive;
        nonpositive.degree = 0;
        CHECK(thrown_code([&] { genus_from_profile(nonpositive); }) == errc::invalid_profile);
    }
}

TEST_CASE("base_genus closed form equals the profile route") {
    CHECK(base_genus(anchor_d3()) == 2);
    CHECK(base_genus(anchor_d2()) == 2);
    for (int d : {2, 3, 5, 7}) {
        for (int r = 3; r <= 12; ++r) {
            if (d == 2 && r % 2 != 0)
                continue;
            const auto curve = grid_curve(d, r);
            const int g = base_genus(curve);
            CHECK(g == (r - 2) * (d - 1) / 2);
            CHECK(g == genus_from_profile(ramification_profile(curve.degree(), curve.alpha())));
        }
    }
}

TEST_CASE("expected_branch_count inverts the genus formula") {
    CHECK(expected_branch_count(2, PrimeDegree(3)) == 4);
    CHECK(expected_branch_count(2, PrimeDegree(2)) == 6);
    CHECK(expected_branch_count(0, PrimeDegree(5)) == 2);
    CHECK(thrown_code([] { expected_branch_count(2, PrimeDegree(7)); }) ==
          errc::divisibility_failure);
    CHECK(thrown_code([] { expected_branch_count(-1, PrimeDegree(3)); }) ==
          errc::invalid_argument);

    for (int d : {2, 3, 5, 7}) {
        for (int r = 3; r <= 12; ++r) {
            if (d == 2 && r % 2 != 0)
                continue;
            const auto curve = cycov::test::grid_curve(d, r);
            CHECK(expected_branch_count(base_genus(curve), curve.degree()) == r);
        }
    }
}
