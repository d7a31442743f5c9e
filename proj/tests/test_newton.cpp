#include "nwspec/fixtures.hpp"
#include "nwspec/newton.hpp"
#include "nwspec/oracle.hpp"
#include "nwspec/parse.hpp"
#include "nwspec/subdivision.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace nwspec;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Germ fixture_germ(const char* name) {
    const auto& fx = fixtures::get(name);
    return parse_germ(fx.germ, fx.vars);
}
} // namespace

TEST_CASE("f3 has three triangle facets") {
    auto L = compact_faces(fixture_germ("f3"));
    auto facets = L.facets();
    REQUIRE(facets.size() == 3);
    std::set<std::vector<ExpVec>> expected{
        {{0, 0, 8}, {2, 2, 2}, {8, 0, 0}},
        {{0, 8, 0}, {2, 2, 2}, {8, 0, 0}},
        {{0, 0, 8}, {0, 8, 0}, {2, 2, 2}},
    };
    for (int id : facets) {
        auto v = L.faces[id].vertices;
        std::sort(v.begin(), v.end());
        CHECK(expected.count(v) == 1);
    }
}

TEST_CASE("x^2+y^2 has a single segment facet") {
    auto L = compact_faces(parse_germ("x^2+y^2", XY));
    auto facets = L.facets();
    REQUIRE(facets.size() == 1);
    CHECK(L.faces[facets[0]].vertices == std::vector<ExpVec>{{0, 2}, {2, 0}});
}

TEST_CASE("f1 has the three boundary segments") {
    auto L = compact_faces(fixture_germ("f1"));
    auto facets = L.facets();
    REQUIRE(facets.size() == 3);
    std::set<std::vector<ExpVec>> expected{
        {{0, 12}, {3, 6}},
        {{3, 6}, {6, 4}},
        {{6, 4}, {15, 0}},
    };
    for (int id : facets) CHECK(expected.count(L.faces[id].vertices) == 1);
}

TEST_CASE("facet covectors are strictly positive and normalized") {
    for (const char* name : {"f1", "f2", "f3"}) {
        auto g = fixture_germ(name);
        auto L = compact_faces(g);
        for (int id : L.facets()) {
            const Face& f = L.faces[id];
            for (const auto& w : f.covector) CHECK(w > 0);
            for (const auto& v : f.vertices) {
                Rat s(0);
                for (int c = 0; c < g.n; ++c) s += f.covector[c] * Rat(v[c]);
                CHECK(s == 1);
            }
        }
    }
}

TEST_CASE("face lattice is intersection closed") {
    auto L = compact_faces(fixture_germ("f2"));
    for (const auto& a : L.faces)
        for (const auto& b : L.faces) {
            std::vector<ExpVec> common;
            std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                  b.vertices.end(), std::back_inserter(common));
            if (!common.empty()) CHECK(L.find_by_vertices(common) != nullptr);
        }
}

TEST_CASE("f2 keeps its quadrilateral facet in the lattice") {
    auto L = compact_faces(fixture_germ("f2"));
    std::vector<ExpVec> quad{{0, 2, 2}, {0, 4, 0}, {2, 0, 2}, {4, 0, 0}};
    std::sort(quad.begin(), quad.end());
    const Face* q = L.find_by_vertices(quad);
    REQUIRE(q != nullptr);
    CHECK(q->dim == 2);
}

TEST_CASE("simpliciality per face counting") {
    CHECK(is_simplicial(compact_faces(fixture_germ("f3")), 3));
    CHECK(is_simplicial(compact_faces(fixture_germ("f2")), 3));
    CHECK(is_simplicial(compact_faces(fixture_germ("f1")), 2));
    CHECK(is_simplicial(compact_faces(parse_germ("x^3+x*y^2+y^4", XY)), 2));

    // Synthetic violation: one vertex lying in four edges with n = 3.
    FaceLattice fake;
    fake.n = 3;
    ExpVec v{1, 1, 1};
    Face vert;
    vert.id = 0;
    vert.vertices = {v};
    vert.dim = 0;
    fake.faces.push_back(vert);
    for (int i = 0; i < 4; ++i) {
        Face e;
        e.id = i + 1;
        e.vertices = {v, ExpVec{3 + i, 0, 0}};
        std::sort(e.vertices.begin(), e.vertices.end());
        e.dim = 1;
        fake.faces.push_back(e);
    }
    CHECK_FALSE(is_simplicial(fake, 3));
}

TEST_CASE("volumes of the worked examples") {
    auto Vf1 = volumes(fixture_germ("f1"));
    CHECK(Vf1[1] == 60); // V_2
    CHECK(Vf1[0] == 27); // V_1

    auto Vq = volumes(parse_germ("x^2+y^2", XY));
    CHECK(Vq[1] == 2);
    CHECK(Vq[0] == 4);

    auto Vb = volumes(parse_germ("x^3+y^3+z^3", XYZ));
    CHECK(Vb[2] == Rat(9, 2));
    CHECK(Vb[1] == Rat(27, 2));
    CHECK(Vb[0] == 9);
}

TEST_CASE("Kouchnirenko Milnor numbers of the fixtures") {
    CHECK(milnor_kouchnirenko(fixture_germ("f1")) == 94);
    CHECK(milnor_kouchnirenko(fixture_germ("f2")) == 31);
    CHECK(milnor_kouchnirenko(fixture_germ("f3")) == 215);
}

TEST_CASE("Brieskorn family closed form") {
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            for (int c = 2; c <= 6; ++c) {
                std::string s = "x" + std::to_string(a) + "+y" + std::to_string(b) + "+z" +
                                std::to_string(c);
                CHECK(milnor_kouchnirenko(parse_germ(s, XYZ)) ==
                      static_cast<long>(a - 1) * (b - 1) * (c - 1));
            }
}

TEST_CASE("normalized facet volumes match cell counts") {
    // (dim tau + 1)! vol(tau-hat) = |det| = lattice count of the half-open cell.
    for (const char* name : {"f1", "f2", "f3"}) {
        auto g = fixture_germ(name);
        auto L = compact_faces(g);
        auto S = triangulate(L);
        for (const auto& s : S.simplices) {
            RatMat m = rows_from_points(s.gens);
            Rat d = det(m);
            CHECK(Int(volume_count_oracle(s)) == abs(rat_num(d)));
        }
    }
}

TEST_CASE("non-convenient germs are rejected with the axis name") {
    try {
        compact_faces(parse_germ("x^2*y+y^2", XY));
        FAIL("expected precondition_error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("axis x") != std::string::npos);
    }
}
