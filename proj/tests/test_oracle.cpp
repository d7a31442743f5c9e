#include "nwspec/fixtures.hpp"
#include "nwspec/oracle.hpp"
#include "nwspec/parse.hpp"

#include <doctest.h>

#include <set>

using namespace nwspec;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
} // namespace

TEST_CASE("Morse point") {
    auto r = milnor_oracle(parse_germ("x^2+y^2", XY));
    REQUIRE(r.stabilized);
    CHECK(r.mu == 1);
    REQUIRE(r.std_monomials.size() == 1);
    CHECK(r.std_monomials[0] == ExpVec{0, 0});
}

TEST_CASE("x^3+y^3 has the expected standard monomials") {
    auto r = milnor_oracle(parse_germ("x^3+y^3", XY));
    REQUIRE(r.stabilized);
    CHECK(r.mu == 4);
    std::set<ExpVec> std_set(r.std_monomials.begin(), r.std_monomials.end());
    CHECK(std_set == std::set<ExpVec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("f2 rank") {
    auto r = milnor_oracle(parse_germ(fixtures::get("f2").germ, XYZ));
    REQUIRE(r.stabilized);
    CHECK(r.mu == 31);
}

TEST_CASE("two-variable Brieskorn closed form") {
    for (int a = 2; a <= 7; ++a)
        for (int b = 2; b <= 7; ++b) {
            std::string s = "x" + std::to_string(a) + "+y" + std::to_string(b);
            auto r = milnor_oracle(parse_germ(s, XY));
            REQUIRE(r.stabilized);
            CHECK(r.mu == static_cast<long>(a - 1) * (b - 1));
        }
}

TEST_CASE("degenerate binary form is reported") {
    auto g = parse_germ("x^2+2*x*y+y^2", XY);
    auto L = compact_faces(g);
    auto rep = nondegeneracy_check(g, L);
    CHECK(rep.overall == FaceVerdict::NotFinite);
    // And the Milnor oracle must not stabilize on it either.
    auto r = milnor_oracle(g, 0, 10);
    CHECK_FALSE(r.stabilized);
}

TEST_CASE("nondegenerate fixtures certify as finite") {
    for (const char* name : {"f1", "f2", "f3"}) {
        const auto& fx = fixtures::get(name);
        auto g = parse_germ(fx.germ, fx.vars);
        auto rep = nondegeneracy_check(g, compact_faces(g));
        CHECK(rep.overall == FaceVerdict::Finite);
    }
}

TEST_CASE("oracle agrees with the combinatorial Milnor number") {
    for (const char* name : {"f1", "f2"}) {
        const auto& fx = fixtures::get(name);
        auto g = parse_germ(fx.germ, fx.vars);
        auto r = milnor_oracle(g);
        REQUIRE(r.stabilized);
        CHECK(r.mu == fx.mu);
    }
}
