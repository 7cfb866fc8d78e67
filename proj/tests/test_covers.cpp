#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cycov/covers.hpp"
#include "cycov/errors.hpp"

#include "test_support.hpp"

using namespace cycov;
using cycov::test::anchor_d2;
using cycov::test::anchor_d3;
using cycov::test::ev;
using cycov::test::grid_curve;
using cycov::test::thrown_code;

TEST_CASE("CoverSpec validation") {
    const auto curve = anchor_d3();
    CHECK(CoverSpec(curve, ev(3, {1, 2, 0, 0})).beta() == ev(3, {1, 2, 0, 0}));
    CHECK(thrown_code([&] { CoverSpec(curve, ev(2, {1, 1, 0, 0})); }) == errc::modulus_mismatch);
    CHECK(thrown_code([&] { CoverSpec(curve, ev(3, {1, 2, 0})); }) == errc::length_mismatch);
    CHECK(thrown_code([&] { CoverSpec(curve, ev(3, {1, 1, 0, 0})); }) == errc::not_degree_zero);
    CHECK(thrown_code([&] { CoverSpec(curve, ev(3, {0, 0, 0, 0})); }) == errc::trivial_cover);
    CHECK(thrown_code([&] { CoverSpec(curve, ev(3, {1, 1, 2, 2})); }) == errc::trivial_cover);
    CHECK(thrown_code([&] { CoverSpec(curve, ev(3, {2, 2, 1, 1})); }) == errc::trivial_cover);
}

TEST_CASE("all_covers enumerates one canonical per nonzero coset") {
    struct Case {
        CyclicCurve curve;
        std::size_t expected;
    };
    const std::vector<Case> cases = {
        {anchor_d3(), 8}, {anchor_d2(), 15}, {grid_curve(2, 4), 3}, {grid_curve(7, 3), 6}};
    for (const auto& [curve, expected] : cases) {
        const auto covers = all_covers(curve);
        CHECK(covers.size() == expected);

        std::set<ExponentVector> canonicals;
        for (const auto& c : covers) {
            CHECK(coset_canonical(c.beta(), curve.alpha()) == c.beta());
            canonicals.insert(c.beta());
        }
        CHECK(canonicals.size() == covers.size());
        CHECK(std::is_sorted(covers.begin(), covers.end(),
                             [](const CoverSpec& a, const CoverSpec& b) {
                                 return a.beta() < b.beta();
                             }));

        // Every nonzero degree-zero vector lands in exactly one listed coset.
        std::set<ExponentVector> reachable;
        for (const auto& c : covers)
            for (int m = 0; m < curve.degree().value(); ++m)
                reachable.insert(linear_combine(1, c.beta(), m, curve.alpha()));
        std::size_t nonzero_nontrivial = 0;
        for (const auto& v : enumerate_degree_zero(curve.degree(), curve.branch_count()))
            if (!span_membership(v, curve.alpha()).has_value()) {
                ++nonzero_nontrivial;
                CHECK(reachable.count(v) == 1);
            }
        CHECK(reachable.size() ==
              covers.size() * static_cast<std::size_t>(curve.degree().value()));
        CHECK(nonzero_nontrivial == reachable.size());
    }
}

TEST_CASE("cover_genus closed form and unramified-cover relation") {
    CHECK(cover_genus(CoverSpec(anchor_d3(), ev(3, {1, 2, 0, 0}))) == 4);
    CHECK(cover_genus(CoverSpec(anchor_d2(), ev(2, {1, 1, 0, 0, 0, 0}))) == 3);
    CHECK(cover_genus(CoverSpec(grid_curve(2, 4), ev(2, {0, 0, 1, 1}))) == 1);
    CHECK(cover_genus(CoverSpec(grid_curve(7, 3), ev(7, {1, 2, 4}))) == 15);
    CHECK(cover_genus(CoverSpec(grid_curve(5, 4), ev(5, {1, 4, 0, 0}))) == 16);

    for (int d : {2, 3, 5}) {
        for (int r = 3; r <= 7; ++r) {
            if (d == 2 && r % 2 != 0)
                continue;
            const auto curve = grid_curve(d, r);
            const int g = base_genus(curve);
            for (const auto& cover : all_covers(curve)) {
                const int gt = cover_genus(cover);
                CHECK(gt == (d - 1) * (r * d - 2 * d - 2) / 2);
                CHECK(gt == d * (g - 1) + 1);
            }
        }
    }
}

TEST_CASE("support") {
    CHECK(support(ev(3, {1, 2, 0, 0})) == std::vector<std::size_t>{0, 1});
    CHECK(support(ev(3, {0, 0, 0, 0})).empty());
    CHECK(support(ev(2, {1, 0, 1, 0, 1, 0})) == std::vector<std::size_t>{0, 2, 4});
}

TEST_CASE("intermediate_quotients") {
    SUBCASE("d = 3 example") {
        const auto qs = intermediate_quotients(CoverSpec(anchor_d3(), ev(3, {1, 2, 0, 0})));
        REQUIRE(qs.size() == 3);
        CHECK(qs[0].first == ev(3, {1, 2, 0, 0}));
        CHECK(qs[0].second == 0);
        CHECK(qs[1].first == ev(3, {0, 2, 2, 2}));
        CHECK(qs[1].second == 1);
        CHECK(qs[2].first == ev(3, {1, 0, 1, 1}));
        CHECK(qs[2].second == 1);
    }

    SUBCASE("d = 2 example") {
        const auto qs =
            intermediate_quotients(CoverSpec(anchor_d2(), ev(2, {1, 1, 0, 0, 0, 0})));
        REQUIRE(qs.size() == 2);
        CHECK(qs[0].first == ev(2, {1, 1, 0, 0, 0, 0}));
        CHECK(qs[0].second == 0);
        CHECK(qs[1].first == ev(2, {0, 0, 1, 1, 1, 1}));
        CHECK(qs[1].second == 1);
    }

    SUBCASE("genus agrees with an independent profile computation") {
        for (const auto& curve : {anchor_d3(), anchor_d2(), grid_curve(5, 4)}) {
            for (const auto& cover : all_covers(curve)) {
                const auto qs = intermediate_quotients(cover);
                REQUIRE(qs.size() == static_cast<std::size_t>(curve.degree().value()));
                CHECK(qs[0].first == cover.beta());
                for (const auto& [vec, genus] : qs) {
                    CHECK(genus ==
                          genus_from_profile(ramification_profile(curve.degree(), vec)));
                    const int k = static_cast<int>(support(vec).size());
                    CHECK(genus == (curve.degree().value() - 1) * (k - 2) / 2);
                }
            }
        }
    }
}

TEST_CASE("paper_iso_related is reflexive and symmetric but not transitive") {
    const auto alpha = ev(3, {1, 1, 2, 2});
    const auto a = ev(3, {1, 2, 0, 0});
    const auto b = ev(3, {0, 2, 2, 2});  // alpha - a
    const auto c = ev(3, {2, 0, 2, 2});  // a + alpha, and 2*alpha - b

    CHECK(paper_iso_related(a, a, alpha));
    CHECK(paper_iso_related(a, b, alpha));
    CHECK(paper_iso_related(b, a, alpha));
    CHECK(paper_iso_related(b, c, alpha));
    CHECK(!paper_iso_related(a, c, alpha));

    // Oracle for the failing pair: neither equality nor any m in [1, d).
    CHECK(a != c);
    const auto sum = linear_combine(1, a, 1, c);
    for (int m = 1; m < 3; ++m)
        CHECK(linear_combine(m, alpha, 0, alpha) != sum);

    // The closure repairs it: a and c name the same cover.
    CHECK(isomorphic_as_covers(a, c, alpha));
}

TEST_CASE("isomorphic_as_covers") {
    const auto alpha = ev(3, {1, 1, 2, 2});
    const auto a = ev(3, {1, 2, 0, 0});
    CHECK(isomorphic_as_covers(a, ev(3, {2, 0, 2, 2}), alpha));
    CHECK(isomorphic_as_covers(a, ev(3, {2, 1, 0, 0}), alpha));  // -a
    CHECK(isomorphic_as_covers(a, ev(3, {0, 2, 2, 2}), alpha));  // alpha - a
    CHECK(!isomorphic_as_covers(a, ev(3, {1, 0, 2, 0}), alpha));

    SUBCASE("equivalence relation on all valid vectors") {
        for (const auto& curve : {grid_curve(3, 4), grid_curve(2, 4)}) {
            const auto& al = curve.alpha();
            std::vector<ExponentVector> valid;
            for (const auto& v : enumerate_degree_zero(curve.degree(), curve.branch_count()))
                if (!span_membership(v, al).has_value())
                    valid.push_back(v);
            for (const auto& x : valid) {
                CHECK(isomorphic_as_covers(x, x, al));
                for (const auto& y : valid) {
                    const bool xy = isomorphic_as_covers(x, y, al);
                    CHECK(xy == isomorphic_as_covers(y, x, al));
                    if (paper_iso_related(x, y, al))
                        CHECK(xy);
                    if (!xy)
                        continue;
                    for (const auto& z : valid)
                        if (isomorphic_as_covers(y, z, al))
                            CHECK(isomorphic_as_covers(x, z, al));
                }
            }
        }
    }
}

TEST_CASE("iso_classes partitions the valid vectors") {
    SUBCASE("d = 3, r = 4: four classes of six") {
        const auto classes = iso_classes(anchor_d3());
        REQUIRE(classes.size() == 4);
        std::set<ExponentVector> seen;
        for (const auto& cls : classes) {
            CHECK(cls.members.size() == 6);
            CHECK(cls.canonical == cls.members.front());
            CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
            CHECK(cls.quotient_genera.size() == 3);
            for (const auto& m : cls.members) {
                CHECK(seen.insert(m).second);
                CHECK(isomorphic_as_covers(cls.canonical, m, anchor_d3().alpha()));
            }
        }
        CHECK(seen.size() == 24);

        // The class containing (1,2,0,0) carries quotient genera {0,1,1}.
        const auto alpha = anchor_d3().alpha();
        bool found = false;
        for (const auto& cls : classes) {
            if (!isomorphic_as_covers(cls.canonical, ev(3, {1, 2, 0, 0}), alpha))
                continue;
            found = true;
            CHECK(cls.quotient_genera == std::vector<int>{0, 1, 1});
        }
        CHECK(found);
    }

    SUBCASE("d = 2, r = 6: fifteen classes of two, quotient genera {0, 1}") {
        const auto classes = iso_classes(anchor_d2());
        REQUIRE(classes.size() == 15);
        std::set<ExponentVector> seen;
        for (const auto& cls : classes) {
            CHECK(cls.members.size() == 2);
            CHECK(cls.quotient_genera == std::vector<int>{0, 1});
            for (const auto& m : cls.members)
                CHECK(seen.insert(m).second);
        }
        CHECK(seen.size() == 30);
    }

    SUBCASE("d = 2, r = 4: three classes of two, both quotients rational") {
        const auto classes = iso_classes(grid_curve(2, 4));
        REQUIRE(classes.size() == 3);
        for (const auto& cls : classes) {
            CHECK(cls.members.size() == 2);
            CHECK(cls.quotient_genera == std::vector<int>{0, 0});
        }
    }

    SUBCASE("quotient genera are invariant across members") {
        for (const auto& curve : {anchor_d3(), grid_curve(5, 4)}) {
            for (const auto& cls : iso_classes(curve)) {
                for (const auto& member : cls.members) {
                    std::vector<int> genera;
                    for (const auto& [vec, genus] :
                         intermediate_quotients(CoverSpec(curve, member)))
                        genera.push_back(genus);
                    std::sort(genera.begin(), genera.end());
                    CHECK(genera == cls.quotient_genera);
                }
            }
        }
    }

    SUBCASE("classes are ordered by canonical member") {
        const auto classes = iso_classes(anchor_d3());
        CHECK(std::is_sorted(classes.begin(), classes.end(),
                             [](const IsoClass& a, const IsoClass& b) {
                                 return a.canonical < b.canonical;
                             }));
    }
}

TEST_CASE("count_by_support_oracle") {
    const auto c3 = anchor_d3();
    CHECK(count_by_support_oracle(c3, 0, true) == 1);
    CHECK(count_by_support_oracle(c3, 0, false) == 0);
    CHECK(count_by_support_oracle(c3, 1, true) == 0);
    CHECK(count_by_support_oracle(c3, 2, true) == 12);
    CHECK(count_by_support_oracle(c3, 3, true) == 8);
    CHECK(count_by_support_oracle(c3, 4, true) == 6);
    CHECK(count_by_support_oracle(c3, 4, false) == 4);

    const auto c2 = anchor_d2();
    CHECK(count_by_support_oracle(c2, 2, true) == 15);
    CHECK(count_by_support_oracle(c2, 3, true) == 0);
    CHECK(count_by_support_oracle(c2, 6, true) == 1);
    CHECK(count_by_support_oracle(c2, 6, false) == 0);

    CHECK(thrown_code([&] { count_by_support_oracle(c3, -1, true); }) == errc::invalid_argument);
    CHECK(thrown_code([&] { count_by_support_oracle(c3, 5, true); }) == errc::invalid_argument);

    // Totals: the counts by support partition the whole hyperplane.
    for (const auto& curve : {c3, c2, grid_curve(5, 4)}) {
        long long total = 0;
        for (int k = 0; k <= curve.branch_count(); ++k)
            total += count_by_support_oracle(curve, k, true);
        long long hyperplane = 1;
        for (int i = 1; i < curve.branch_count(); ++i)
            hyperplane *= curve.degree().value();
        CHECK(total == hyperplane);
    }
}

TEST_CASE("count_formula_corrected matches the oracle everywhere") {
    CHECK(count_formula_corrected(PrimeDegree(3), 4, 0) == 1);
    CHECK(count_formula_corrected(PrimeDegree(3), 4, 2) == 12);
    CHECK(count_formula_corrected(PrimeDegree(3), 4, 3) == 8);
    CHECK(count_formula_corrected(PrimeDegree(2), 6, 2) == 15);

    for (int d : {2, 3, 5, 7}) {
        for (int r = 3; r <= 7; ++r) {
            if (d == 2 && r % 2 != 0)
                continue;
            const auto curve = grid_curve(d, r);
            for (int k = 0; k <= r; ++k)
                CHECK(count_formula_corrected(curve.degree(), r, k) ==
                      count_by_support_oracle(curve, k, true));
        }
    }

    CHECK(thrown_code([] { count_formula_corrected(PrimeDegree(3), 4, 5); }) ==
          errc::invalid_argument);
}

TEST_CASE("count_formula_paper evaluates the published expression exactly") {
    CHECK(count_formula_paper(PrimeDegree(3), 4, 1) == BigRational(4));
    CHECK(count_formula_paper(PrimeDegree(3), 4, 2) == BigRational(6));
    CHECK(count_formula_paper(PrimeDegree(3), 4, 3) == BigRational(12));
    CHECK(count_formula_paper(PrimeDegree(3), 4, 4) == BigRational(5));
    CHECK(count_formula_paper(PrimeDegree(3), 4, 0) == BigRational(0));
    CHECK(count_formula_paper(PrimeDegree(2), 6, 2) == BigRational(0));
    CHECK(count_formula_paper(PrimeDegree(2), 6, 3) == BigRational(20));

    // Where it deviates from the oracle, and where it happens to agree.
    CHECK(count_formula_paper(PrimeDegree(3), 4, 2) !=
          BigRational(count_by_support_oracle(anchor_d3(), 2, true)));
    CHECK(count_formula_paper(PrimeDegree(2), 6, 2) !=
          BigRational(count_by_support_oracle(anchor_d2(), 2, true)));
}

TEST_CASE("covers_by_quotient_genus") {
    const auto c3 = anchor_d3();

    SUBCASE("genus zero quotients come from support two") {
        const auto listing = covers_by_quotient_genus(c3, 0);
        CHECK(listing.diagnostic.empty());
        CHECK(listing.vectors.size() == 12);
        for (const auto& v : listing.vectors)
            CHECK(support(v).size() == 2);
        CHECK(std::is_sorted(listing.vectors.begin(), listing.vectors.end()));
    }

    SUBCASE("genus two quotients need full support, multiples of alpha drop out") {
        const auto listing = covers_by_quotient_genus(c3, 2);
        CHECK(listing.diagnostic.empty());
        CHECK(listing.vectors.size() == 4);
        for (const auto& v : listing.vectors) {
            CHECK(support(v).size() == 4);
            CHECK(!span_membership(v, c3.alpha()).has_value());
        }
    }

    SUBCASE("d = 2 listings") {
        CHECK(covers_by_quotient_genus(anchor_d2(), 0).vectors.size() == 15);
        CHECK(covers_by_quotient_genus(anchor_d2(), 1).vectors.size() == 15);
        const auto top = covers_by_quotient_genus(anchor_d2(), 2);
        CHECK(top.diagnostic.empty());
        CHECK(top.vectors.empty());
    }

    SUBCASE("diagnostics instead of errors") {
        const auto too_big = covers_by_quotient_genus(c3, 5);
        CHECK(too_big.vectors.empty());
        CHECK(!too_big.diagnostic.empty());

        const auto indivisible = covers_by_quotient_genus(grid_curve(5, 4), 1);
        CHECK(indivisible.vectors.empty());
        CHECK(!indivisible.diagnostic.empty());

        const auto negative = covers_by_quotient_genus(c3, -1);
        CHECK(negative.vectors.empty());
        CHECK(!negative.diagnostic.empty());
    }

    SUBCASE("listing agrees with the oracle at the matching support size") {
        for (const auto& curve : {c3, anchor_d2(), grid_curve(5, 4)}) {
            const int dm1 = curve.degree().value() - 1;
            for (int g0 = 0; g0 <= 4; ++g0) {
                const auto listing = covers_by_quotient_genus(curve, g0);
                if (!listing.diagnostic.empty())
                    continue;
                const int k = 2 * g0 / dm1 + 2;
                CHECK(static_cast<long long>(listing.vectors.size()) ==
                      count_by_support_oracle(curve, k, false));
            }
        }
    }
}
