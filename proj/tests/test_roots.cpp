#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ramify/parse.hpp"
#include "ramify/roots.hpp"

using namespace ramify;

namespace {

Polynomial<Approx> from_roots(const std::vector<std::pair<Approx, int>>& roots) {
    Polynomial<Approx> p = Polynomial<Approx>::constant({1, 0});
    for (auto& [z, m] : roots)
        for (int i = 0; i < m; ++i)
            p = p * Polynomial<Approx>(std::vector<Approx>{-z, {1, 0}});
    return p;
}

Polynomial<Approx> parse_poly(const std::string& s) {
    auto f = parse::parse_map<Approx>(s);
    REQUIRE(f.den().degree() == 0);
    return f.num() * f.den().coeff(0); // den is monic-normalized constant
}

} // namespace

TEST_CASE("polynomial arithmetic and shift") {
    auto p = parse_poly("(z-1)^3*(z+3)");
    CHECK(p.degree() == 4);
    CHECK(std::abs(p.eval({1, 0})) < 1e-12);
    CHECK(std::abs(p.eval({-3, 0})) < 1e-12);
    CHECK(std::abs(p.eval({0, 0}) - Approx{-3, 0}) < 1e-12);
    CHECK(p.shifted({1, 0}).order_at_zero() == 3);
    CHECK(p.shifted({-3, 0}).order_at_zero() == 1);
    CHECK(p.shifted({2, 0}).order_at_zero() == 0);
}

TEST_CASE("aberth with clustering recovers multiple roots") {
    auto res = roots_with_multiplicity(parse_poly("(z-1)^3*(z+3)"));
    REQUIRE(res.size() == 2);
    // sorted by (re, im)
    CHECK(std::abs(res[0].first - Approx{-3, 0}) < 1e-8);
    CHECK(res[0].second == 1);
    CHECK(std::abs(res[1].first - Approx{1, 0}) < 1e-8);
    CHECK(res[1].second == 3);
}

TEST_CASE("high multiplicity and nearby simple roots") {
    auto res = roots_with_multiplicity(parse_poly("(z-2i)^5"));
    REQUIRE(res.size() == 1);
    CHECK(res[0].second == 5);
    CHECK(std::abs(res[0].first - Approx{0, 2}) < 1e-7);

    // two genuinely distinct roots 1e-3 apart stay distinct
    auto close = roots_with_multiplicity(from_roots({{{1.0, 0}, 1}, {{1.001, 0}, 1}, {{-2, 0}, 2}}));
    int total = 0;
    for (auto& [z, m] : close) total += m;
    CHECK(total == 4);
    REQUIRE(close.size() == 3);
}

TEST_CASE("random products reproduce their factorizations") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> mult(1, 3);
    for (int t = 0; t < 60; ++t) {
        std::vector<std::pair<Approx, int>> truth;
        int deg = 0;
        while (deg < 6) {
            Approx z{g(rng) * 2, g(rng) * 2};
            bool far = true;
            for (auto& [w, m] : truth) far = far && std::abs(z - w) > 0.3;
            if (!far) continue;
            int m = std::min(mult(rng), 7 - deg);
            truth.push_back({z, m});
            deg += m;
        }
        auto res = roots_with_multiplicity(from_roots(truth));
        REQUIRE(res.size() == truth.size());
        std::sort(truth.begin(), truth.end(), [](auto& a, auto& b) {
            return a.first.real() != b.first.real() ? a.first.real() < b.first.real()
                                                    : a.first.imag() < b.first.imag();
        });
        for (size_t i = 0; i < truth.size(); ++i) {
            CHECK(res[i].second == truth[i].second);
            CHECK(std::abs(res[i].first - truth[i].first) < 1e-6);
        }
    }
}

TEST_CASE("squarefree decomposition certifies multiplicities") {
    auto p = parse::parse_map<Exact>("(z-1)^3*(z+3)").num();
    auto fac = squarefree_decomposition(p);
    // factors (z+3) at multiplicity 1 and (z-1) at multiplicity 3
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].second == 1);
    CHECK(fac[0].first.degree() == 1);
    CHECK(fac[1].second == 3);
    CHECK(fac[1].first.degree() == 1);
}

TEST_CASE("exact roots in Q(i)") {
    auto p = parse::parse_map<Exact>("(z-1/2)^2*(z+2i)").num();
    auto res = exact_roots_with_multiplicity(p);
    REQUIRE(res.size() == 2);
    int total = 0;
    bool saw_half = false, saw_im = false;
    for (auto& [z, m] : res) {
        total += m;
        if (z == Exact(Rational(1, 2))) {
            saw_half = true;
            CHECK(m == 2);
        }
        if (z == Exact(Rational(0), Rational(-2))) {
            saw_im = true;
            CHECK(m == 1);
        }
    }
    CHECK(total == 3);
    CHECK(saw_half);
    CHECK(saw_im);
}

TEST_CASE("exact roots outside Q(i) are refused, never wrong") {
    auto p = parse::parse_map<Exact>("z^2-2").num();
    CHECK_THROWS_AS(exact_roots_with_multiplicity(p), ExactRootsUnavailable);
    auto q = parse::parse_map<Exact>("z^2+z+1").num();
    CHECK_THROWS_AS(exact_roots_with_multiplicity(q), ExactRootsUnavailable);
}

TEST_CASE("rational reconstruction") {
    Rational r;
    REQUIRE(rational_reconstruct(0.75, r));
    CHECK(r == Rational(3, 4));
    REQUIRE(rational_reconstruct(1.0 / 3.0, r));
    CHECK(r == Rational(1, 3));
    REQUIRE(rational_reconstruct(-16.0, r));
    CHECK(r == Rational(-16));
    CHECK_FALSE(rational_reconstruct(3.14159265358979, r, 100, 1e-12));
}
