#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramify/jsonio.hpp"
#include "ramify/parse.hpp"

using namespace ramify;
using jsonio::json;

TEST_CASE("sphere points round trip") {
    auto inf = jsonio::point_to_json(SpherePoint<Approx>::infinity());
    CHECK(inf == json{{"inf", true}});
    CHECK(jsonio::point_from_json<Approx>(inf).is_infinity());

    SpherePoint<Exact> p(Exact(Rational(3, 4), Rational(-2, 7)));
    auto j = jsonio::point_to_json(p);
    CHECK(j.at("re").get<std::string>() == "3/4");
    CHECK(j.at("im").get<std::string>() == "-2/7");
    CHECK(jsonio::point_from_json<Exact>(j).value() == p.value());

    SpherePoint<Approx> q(Approx{1.5, -2.25});
    CHECK(jsonio::point_from_json<Approx>(jsonio::point_to_json(q)).eq(q));
}

TEST_CASE("passport shape round trip") {
    PassportShape s;
    s.degree = 4;
    s.entries = {{3, 1}, {3, 1}, {3, 1}};
    auto back = jsonio::shape_from_json(jsonio::shape_to_json(s));
    CHECK(back.degree == 4);
    CHECK(back.entries == s.entries);
    json bad = {{"degree", 4}, {"entries", {{{"local_degrees", {5}}}}}};
    CHECK_THROWS_AS(jsonio::shape_from_json(bad), MalformedPassport);
}

TEST_CASE("fgt records round trip") {
    auto r = fgt::catenoid_record();
    auto j = jsonio::record_to_json(r);
    CHECK(j.at("ends")[0].at("class") == "missed:1");
    auto back = jsonio::record_from_json(j);
    CHECK(back.degree == r.degree);
    CHECK(back.missed == r.missed);
    CHECK(back.ends[1].missed_id == r.ends[1].missed_id);
    CHECK(jsonio::record_to_json(back) == j);

    json broken = j;
    broken["ends"][0]["class"] = "bogus";
    CHECK_THROWS(jsonio::record_from_json(broken));
    json orphan = j;
    orphan["missed"].push_back("3");
    CHECK_THROWS(jsonio::record_from_json(orphan));
}

TEST_CASE("report serialization is stable") {
    auto r = fgt::catenoid_record();
    auto j1 = jsonio::check_to_json(fgt::check_rh(r)).dump();
    auto j2 = jsonio::check_to_json(fgt::check_rh(r)).dump();
    CHECK(j1 == j2);
    auto rep = fgt::no_extension_two_missed(r, "w");
    auto oj = jsonio::obstruction_to_json(rep);
    CHECK(oj.at("exit") == "no_c0_extension");
    CHECK(oj.at("offending_ends") == json::array({0, 1}));
}

TEST_CASE("map and permutation serialization") {
    auto f = parse::parse_map<Exact>("(z-1)^3*(z+3)/z");
    auto j = jsonio::map_to_json(f);
    CHECK(j.at("num").size() == 5);
    CHECK(j.at("den").size() == 2);

    mono::Permutation s{{1, 2, 0, 3}};
    auto pj = jsonio::permutation_to_json(s);
    CHECK(pj.at("cycle_type") == json::array({3, 1}));
    CHECK(pj.at("cycles")[0] == json::array({1, 2, 3}));
}
