// Simplex subdivision of the Newton boundary and the piecewise linear
// weight function h with h = 1 on the boundary.
#pragma once

#include "nwspec/newton.hpp"

#include <utility>
#include <vector>

namespace nwspec {

struct Simplex {
    int id = -1;
    int parent_face = -1;          // id of the boundary facet this piece came from
    std::vector<ExpVec> gens;      // n affinely independent vertices, sorted
};

struct Subdivision {
    int n = 0;
    std::vector<Simplex> simplices;
};

struct WeightFunction {
    std::vector<RatVec> covectors; // per simplex, w.v = 1 on its generators
    Int M;                         // clears all denominators of h on the lattice

    Rat eval(int simplex_id, const ExpVec& p) const {
        Rat h(0);
        const RatVec& w = covectors[simplex_id];
        for (size_t c = 0; c < w.size(); ++c) h += w[c] * Rat(p[c]);
        return h;
    }
};

// Deterministic subdivision: simplex facets pass through; non-simplex facets
// get the pulling triangulation at their lexicographically least vertex.
Subdivision triangulate(const FaceLattice& L);

WeightFunction weight_function(const Subdivision& S);

// Simplex owning the shifted point alpha+1 and the h-value there. Preference
// order: least id with the point inside the closed cell parallelepiped, then
// least id whose cone contains it.
std::pair<int, Rat> locate_and_evaluate(const WeightFunction& W, const Subdivision& S,
                                        const ExpVec& alpha);

// Cone coordinates of p in the simplex's generator basis, if all >= 0.
std::optional<RatVec> cone_coords(const Simplex& s, const ExpVec& p);

} // namespace nwspec
