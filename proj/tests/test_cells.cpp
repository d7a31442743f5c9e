#include "nwspec/cells.hpp"
#include "nwspec/fixtures.hpp"
#include "nwspec/oracle.hpp"
#include "nwspec/parse.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace nwspec;

namespace {
Simplex make_simplex(std::vector<ExpVec> gens) {
    Simplex s;
    s.id = 0;
    s.gens = std::move(gens);
    return s;
}
} // namespace

TEST_CASE("half-open cell of the quadric segment") {
    auto cell = half_open_cell(make_simplex({{2, 0}, {0, 2}}));
    std::set<ExpVec> pts(cell.points.begin(), cell.points.end());
    CHECK(pts == std::set<ExpVec>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("cell sizes from the fixtures") {
    CHECK(half_open_cell(make_simplex({{0, 12}, {3, 6}})).points.size() == 36);
    CHECK(half_open_cell(make_simplex({{0, 0, 8}, {2, 0, 2}, {0, 2, 2}})).points.size() == 32);
}

TEST_CASE("canonical copies from the worked examples") {
    Simplex f2face = make_simplex({{2, 0, 2}, {4, 0, 0}, {0, 4, 0}});
    CHECK(canonical_copy(f2face, ExpVec{1, 1, 1}) == ExpVec{5, 3, 1});

    Simplex tau1 = make_simplex({{0, 12}, {3, 6}});
    CHECK(canonical_copy(tau1, ExpVec{1, 7}) == ExpVec{2, 11});

    Simplex quadric = make_simplex({{2, 0}, {0, 2}});
    CHECK(canonical_copy(quadric, ExpVec{1, 1}) == ExpVec{1, 1}); // fixed point
}

TEST_CASE("canonical copy is an involution on cell points") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(0, 6);
    int done = 0;
    while (done < 25) {
        ExpVec a{d(rng), d(rng)}, b{d(rng), d(rng)};
        RatMat m = rows_from_points({a, b});
        if (det(m) == 0) continue;
        ++done;
        Simplex s = make_simplex({a, b});
        auto cell = half_open_cell(s);
        for (const auto& p : cell.points) {
            ExpVec sum = expvec_add(a, b);
            ExpVec c = expvec_sub(sum, p);
            bool nonneg = true;
            for (long x : c)
                if (x < 0) nonneg = false;
            if (!nonneg) continue;
            CHECK(canonical_copy(s, canonical_copy(s, p)) == p);
        }
    }
}

TEST_CASE("cell count equals |det| equals the scan oracle on random simplices") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(0, 6);
    int checked2 = 0, checked3 = 0;
    while (checked2 < 25) {
        ExpVec a{d(rng), d(rng)}, b{d(rng), d(rng)};
        RatMat m = rows_from_points({a, b});
        Rat dd = det(m);
        if (dd == 0) continue;
        ++checked2;
        Simplex s = make_simplex({a, b});
        CHECK(Int(static_cast<long>(half_open_cell(s).points.size())) == abs(rat_num(dd)));
        CHECK(Int(volume_count_oracle(s)) == abs(rat_num(dd)));
    }
    while (checked3 < 25) {
        ExpVec a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)}, c{d(rng), d(rng), d(rng)};
        RatMat m = rows_from_points({a, b, c});
        Rat dd = det(m);
        if (dd == 0) continue;
        ++checked3;
        Simplex s = make_simplex({a, b, c});
        CHECK(Int(static_cast<long>(half_open_cell(s).points.size())) == abs(rat_num(dd)));
        CHECK(Int(volume_count_oracle(s)) == abs(rat_num(dd)));
    }
}

TEST_CASE("canonical copy rejects misuse") {
    Simplex tau1 = make_simplex({{0, 12}, {3, 6}});
    CHECK_THROWS_AS(canonical_copy(tau1, ExpVec{9, 1}), internal_error);
}
