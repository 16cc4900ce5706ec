#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramify/lifting.hpp"

using namespace ramify;

TEST_CASE("local lift pinned cases") {
    auto r = lift::local_lift({2, 5});
    REQUIRE(r.has_value());
    CHECK(r->k == 2);
    CHECK(r->beta_lift == 1);

    r = lift::local_lift({2, 2});
    REQUIRE(r.has_value());
    CHECK(r->k == 1);
    CHECK(r->beta_lift == 0);

    CHECK_FALSE(lift::local_lift({2, 3}).has_value());
    // beta_f = 0: the unramified sheet lifts anything
    r = lift::local_lift({0, 7});
    REQUIRE(r.has_value());
    CHECK(r->k == 8);
}

TEST_CASE("exhaustive divisibility sweep") {
    // the acceptance sweep, checked here over the same 51x51 grid
    int mismatches = 0;
    for (int bf = 0; bf <= 50; ++bf)
        for (int bF = 0; bF <= 50; ++bF) {
            auto r = lift::local_lift({bf, bF});
            bool divides = (1 + bF) % (1 + bf) == 0;
            if (r.has_value() != divides) ++mismatches;
            if (r) {
                if (r->k * (1 + bf) != 1 + bF) ++mismatches;
                if (r->beta_lift != r->k - 1) ++mismatches;
            }
        }
    CHECK(mismatches == 0);
}

TEST_CASE("divisibility predicate for continuous extensions") {
    CHECK(lift::c0_extension_divisibility({2, 2, 5}, 3));
    CHECK_FALSE(lift::c0_extension_divisibility({2, 3}, 3));
    CHECK(lift::c0_extension_divisibility({}, 3));
    CHECK_THROWS_AS(lift::c0_extension_divisibility({2}, 1), PreconditionViolated);
}

TEST_CASE("passport-level feasibility") {
    PassportShape h;
    h.degree = 4;
    h.entries = {{3, 1}, {3, 1}, {3, 1}}; // the obstruction covering

    auto rep = lift::passport_lift_feasibility(h, {{0, {2}}});
    CHECK(rep.feasible);
    REQUIRE(rep.ends.size() == 1);
    // beta_F = 2: 1+beta_F = 3 lifts through both the 3-sheet and the 1-sheet
    CHECK(rep.ends[0].liftable_sheets == std::vector<int>{0, 1});

    rep = lift::passport_lift_feasibility(h, {{0, {1}}});
    CHECK(rep.feasible);
    CHECK(rep.ends[0].liftable_sheets == std::vector<int>{1}); // only the unramified sheet

    PassportShape ramified_only;
    ramified_only.degree = 3;
    ramified_only.entries = {{3}};
    rep = lift::passport_lift_feasibility(ramified_only, {{0, {1}}});
    CHECK_FALSE(rep.feasible); // 3 does not divide 2

    CHECK_THROWS(lift::passport_lift_feasibility(h, {{5, {1}}}));
}
