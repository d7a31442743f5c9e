#include "nwspec/fixtures.hpp"
#include "nwspec/parse.hpp"

#include <doctest.h>

#include <random>

using namespace nwspec;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
} // namespace

TEST_CASE("compressed syntax follows the xiyjzk convention") {
    Germ g = parse_germ("x15y2", XY);
    REQUIRE(g.terms.size() == 1);
    CHECK(g.terms.at(ExpVec{15, 2}) == 1);
}

TEST_CASE("caret syntax with explicit products") {
    Germ g = parse_germ("x^2+2*x*y+y^2", XY);
    REQUIRE(g.terms.size() == 3);
    CHECK(g.terms.at(ExpVec{2, 0}) == 1);
    CHECK(g.terms.at(ExpVec{1, 1}) == 2);
    CHECK(g.terms.at(ExpVec{0, 2}) == 1);
}

TEST_CASE("f3 support") {
    Germ g = parse_germ("x8+y8+z8+x2y2z2", XYZ);
    REQUIRE(g.terms.size() == 4);
    for (const auto& e : {ExpVec{8, 0, 0}, ExpVec{0, 8, 0}, ExpVec{0, 0, 8}, ExpVec{2, 2, 2}})
        CHECK(g.terms.at(e) == 1);
}

TEST_CASE("the two syntaxes agree on random exponent pairs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(1, 30);
    for (int trial = 0; trial < 40; ++trial) {
        int a = d(rng), b = d(rng);
        std::string compressed = "x" + std::to_string(a) + "y" + std::to_string(b);
        std::string caret = "x^" + std::to_string(a) + "*y^" + std::to_string(b);
        CHECK(parse_germ(compressed, XY).terms == parse_germ(caret, XY).terms);
    }
}

TEST_CASE("parse is a left inverse of the formatter") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> exp(0, 9);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        Germ g;
        g.n = 2;
        g.vars = XY;
        for (int t = 0; t < 4; ++t) {
            int c = coeff(rng);
            ExpVec e{exp(rng), exp(rng)};
            if (c == 0 || expvec_deg(e) == 0) continue;
            g.terms[e] += c;
        }
        std::map<ExpVec, Rat> cleaned;
        for (auto& [e, c] : g.terms)
            if (c != 0) cleaned.emplace(e, c);
        g.terms = cleaned;
        if (g.terms.empty()) continue;
        Germ back = parse_germ(format_germ(g), g.vars);
        CHECK(back.terms == g.terms);
    }
}

TEST_CASE("like terms combine and cancellations drop") {
    Germ g = parse_germ("x^2+x*y-x*y+y^3", XY);
    CHECK(g.terms.size() == 2);
    CHECK(g.terms.count(ExpVec{1, 1}) == 0);
}

TEST_CASE("rational coefficients") {
    Germ g = parse_germ("1/2*x^2+3*y^4", XY);
    CHECK(g.terms.at(ExpVec{2, 0}) == Rat(1, 2));
    CHECK(g.terms.at(ExpVec{0, 4}) == 3);
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_germ("x^2+w^2", XY), parse_error);
    CHECK_THROWS_AS(parse_germ("", XY), parse_error);
    CHECK_THROWS_AS(parse_germ("5", XY), parse_error);      // constant only
    CHECK_THROWS_AS(parse_germ("x^2+3", XY), parse_error);  // constant term
    CHECK_THROWS_AS(parse_germ("x^2++y", XY), parse_error);
    try {
        parse_germ("x^2+q^3", XY);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("multi-letter variables need caret syntax") {
    Germ g = parse_germ("alpha^2+beta^2", {"alpha", "beta"});
    CHECK(g.terms.size() == 2);
}

TEST_CASE("convenience of the fixtures") {
    CHECK(is_convenient(parse_germ(fixtures::get("f1").germ, XY)));
    CHECK(is_convenient(parse_germ(fixtures::get("f3").germ, XYZ)));
    Germ bad = parse_germ("x^2*y+y^2", XY);
    CHECK_FALSE(is_convenient(bad));
    CHECK(missing_axis(bad) == "x");
}
