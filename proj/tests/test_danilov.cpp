#include "nwspec/danilov.hpp"
#include "nwspec/fixtures.hpp"
#include "nwspec/parse.hpp"

#include <doctest.h>

using namespace nwspec;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

struct Pipe {
    Germ g;
    FaceLattice L;
    Subdivision S;
    WeightFunction W;
};

Pipe run(const std::string& text, const std::vector<std::string>& vars) {
    Pipe p;
    p.g = parse_germ(text, vars);
    p.L = compact_faces(p.g);
    p.S = triangulate(p.L);
    p.W = weight_function(p.S);
    return p;
}
} // namespace

TEST_CASE("Poincare evaluation matches cell counts") {
    auto pq = run("x^2+y^2", XY);
    auto series = poincare_cone({{2, 0}, {0, 2}}, pq.S, pq.W);
    CHECK(poincare_volume_evaluation(series, 2, pq.g.n + 1) == 4);

    auto p1 = run(fixtures::get("f1").germ, XY);
    auto s1 = poincare_cone({{0, 12}, {3, 6}}, p1.S, p1.W);
    CHECK(poincare_volume_evaluation(s1, 2, 3) == 36);
}

TEST_CASE("unimodular simplex evaluates to one") {
    auto p = run("x+y", XY); // boundary segment (1,0)-(0,1)
    auto s = poincare_cone({{1, 0}, {0, 1}}, p.S, p.W);
    CHECK(poincare_volume_evaluation(s, 2, 3) == 1);
}

TEST_CASE("paper-quoted hodge entries from the face-series route") {
    auto p2 = run(fixtures::get("f2").germ, XYZ);
    auto t2 = danilov_hodge_numbers(p2.L, p2.S, p2.W, 3);
    CHECK(t2.at(HodgeKey{1, 1, Rat(1, 2)}) == 7); // chi = -1

    auto p3 = run(fixtures::get("f3").germ, XYZ);
    auto t3 = danilov_hodge_numbers(p3.L, p3.S, p3.W, 3);
    CHECK(t3.at(HodgeKey{2, 2, Rat(1, 2)}) == 1);

    auto p1 = run(fixtures::get("f1").germ, XY);
    auto t1 = danilov_hodge_numbers(p1.L, p1.S, p1.W, 2);
    long chi1_total = 0;
    for (const auto& [key, m] : t1)
        if (key.chi == 0) chi1_total += m;
    CHECK(chi1_total == 4);
}

TEST_CASE("face-series table sums to mu") {
    for (const char* name : {"f1", "f2", "f3"}) {
        const auto& fx = fixtures::get(name);
        auto p = run(fx.germ, fx.vars);
        auto t = danilov_hodge_numbers(p.L, p.S, p.W, p.g.n);
        long total = 0;
        for (const auto& [key, m] : t) total += m;
        CHECK(total == fx.mu);
    }
}

TEST_CASE("cross-check report semantics") {
    HodgeTable a, b;
    CHECK(cross_check(a, b).equal); // empty tables agree
    a[HodgeKey{1, 1, Rat(1, 2)}] = 3;
    auto rep = cross_check(a, b);
    CHECK_FALSE(rep.equal);
    REQUIRE(rep.mismatches.size() == 1);
}
