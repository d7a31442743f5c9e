#include "nwspec/classify.hpp"
#include "nwspec/fixtures.hpp"
#include "nwspec/parse.hpp"
#include "nwspec/spp_io.hpp"

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
    std::vector<BasisElement> basis;
};

Pipe run(const std::string& text, const std::vector<std::string>& vars) {
    Pipe p;
    p.g = parse_germ(text, vars);
    p.L = compact_faces(p.g);
    p.S = triangulate(p.L);
    p.W = weight_function(p.S);
    p.basis = build_basis(p.g, p.L, p.S, p.W);
    return p;
}

const BasisElement& find_point(const Pipe& p, const ExpVec& pt) {
    for (const auto& e : p.basis)
        if (e.point == pt) return e;
    throw std::runtime_error("point not in basis");
}
} // namespace

TEST_CASE("spectral pairs of the fixtures match the published lists exactly") {
    for (const char* name : {"f1", "f2", "f3"}) {
        const auto& fx = fixtures::get(name);
        auto p = run(fx.germ, fx.vars);
        auto spp = spectral_pairs(p.basis, p.W, p.g.n);
        auto ref = parse_spp_text(fx.spp);
        auto diff = diff_spp(spp, ref);
        INFO(name << ": " << diff_report(diff));
        CHECK(diff.empty());
    }
}

TEST_CASE("classification of the worked single points") {
    // f1, [69] = x^2 y: spectral pair (-1/2, 2)
    auto p1 = run(fixtures::get("f1").germ, XY);
    const auto& e69 = find_point(p1, ExpVec{3, 2});
    auto hc69 = classify(e69, p1.W, 2);
    CHECK(hc69.h == Rat(1, 2));
    CHECK(hc69.weight == 2);

    // f2, [22] = z at (1,1,2): H^{2,2} at eigenvalue 1, pair (0,3)
    auto p2 = run(fixtures::get("f2").germ, XYZ);
    const auto& e22 = find_point(p2, ExpVec{1, 1, 2});
    auto hc22 = classify(e22, p2.W, 3);
    CHECK(hc22.p == 2);
    CHECK(hc22.q == 2);
    CHECK(hc22.chi == 0);
    CHECK(hc22.weight == 3);

    // the lone quadric point: pair (0,1)
    auto pq = run("x^2+y^2", XY);
    auto spp = spectral_pairs(pq.basis, pq.W, 2);
    REQUIRE(spp.size() == 1);
    CHECK(spp.begin()->first.alpha == 0);
    CHECK(spp.begin()->first.w == 1);
    CHECK(spp.begin()->second == 1);
}

TEST_CASE("spectral numbers stay inside (-1, n-1)") {
    for (const char* name : {"f1", "f2", "f3"}) {
        const auto& fx = fixtures::get(name);
        auto p = run(fx.germ, fx.vars);
        auto spp = spectral_pairs(p.basis, p.W, p.g.n);
        for (const auto& [key, m] : spp) {
            CHECK(key.alpha > -1);
            CHECK(key.alpha < p.g.n - 1);
        }
        if (std::string(name) == "f1") {
            CHECK(spp.begin()->first.alpha == Rat(-19, 24));
            CHECK(spp.rbegin()->first.alpha == Rat(19, 24));
        }
    }
}

TEST_CASE("chi is consistent with integrality of h") {
    auto p = run(fixtures::get("f2").germ, XYZ);
    for (const auto& e : p.basis) {
        auto hc = classify(e, p.W, 3);
        CHECK(hc.chi == frac_part(hc.h));
        CHECK((hc.chi == 0) == is_integer(hc.h));
    }
}

TEST_CASE("multiplicities sum to mu") {
    for (const char* name : {"f1", "f2", "f3"}) {
        const auto& fx = fixtures::get(name);
        auto p = run(fx.germ, fx.vars);
        auto spp = spectral_pairs(p.basis, p.W, p.g.n);
        long total = 0;
        for (const auto& [key, m] : spp) total += m;
        CHECK(total == fx.mu);
    }
}

TEST_CASE("symmetry report on fixtures and the empty multiset") {
    for (const char* name : {"f1", "f2", "f3"}) {
        const auto& fx = fixtures::get(name);
        auto p = run(fx.germ, fx.vars);
        auto spp = spectral_pairs(p.basis, p.W, p.g.n);
        auto hodge = hodge_table(p.basis, p.W, p.g.n);
        auto rep = verify_symmetries(spp, hodge, p.g.n, fx.mu);
        INFO(name);
        for (const auto& c : rep.counterexamples) INFO(c);
        CHECK(rep.ok());
    }
    SpectralPairs empty_spp;
    HodgeTable empty_hodge;
    CHECK(verify_symmetries(empty_spp, empty_hodge, 3).ok());
}

TEST_CASE("paired fixture entries under the spectral symmetry") {
    // f3: ((-1/2,4),1) pairs with ((3/2,0),1); f2: ((-1/4,2),1) with ((5/4,2),1).
    auto p3 = run(fixtures::get("f3").germ, XYZ);
    auto spp3 = spectral_pairs(p3.basis, p3.W, 3);
    CHECK(spp3.at(SppKey{Rat(-1, 2), 4}) == 1);
    CHECK(spp3.at(SppKey{Rat(3, 2), 0}) == 1);
    auto p2 = run(fixtures::get("f2").germ, XYZ);
    auto spp2 = spectral_pairs(p2.basis, p2.W, 3);
    CHECK(spp2.at(SppKey{Rat(-1, 4), 2}) == 1);
    CHECK(spp2.at(SppKey{Rat(5, 4), 2}) == 1);
}

TEST_CASE("Brieskorn spectra are symmetric") {
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = b; c <= 4; ++c) {
                std::string s = "x" + std::to_string(a) + "+y" + std::to_string(b) + "+z" +
                                std::to_string(c);
                auto p = run(s, XYZ);
                auto spp = spectral_pairs(p.basis, p.W, 3);
                auto hodge = hodge_table(p.basis, p.W, 3);
                CHECK(verify_symmetries(spp, hodge, 3).ok());
            }
}
