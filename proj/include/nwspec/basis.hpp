// Monomial basis assembly for the Milnor algebra: half-open cell points plus
// the copy bookkeeping that realizes the Hodge symmetry.
#pragma once

#include "nwspec/cells.hpp"

#include <string>
#include <vector>

namespace nwspec {

struct BasisElement {
    enum class Kind { Interior, SkeletonPoint, SkeletonCopy, CoordShift, VertexTower };

    ExpVec point;  // shifted representative alpha+1; the monomial is point-1
    int owner = -1;
    Kind kind = Kind::Interior;

    // Copy metadata (empty skeleton for interior points).
    std::vector<ExpVec> skeleton; // source skeleton generators, sorted
    ExpVec source;                // point this slot derives from (== point for originals)
    int rung = 0;                 // ladder level: 0 originals, k-1 canonical, shift for CoordShift
    bool canonical = false;
    int skel_hat_dim = 0;         // generator count of the skeleton; n for interior
    bool internal_skeleton = false; // subdivision-internal (not spanning a boundary face)
    int min_face = -1;            // minimal boundary face containing the skeleton / parent facet

    ExpVec monomial() const {
        ExpVec m(point);
        for (auto& c : m) c -= 1;
        return m;
    }
};

std::vector<BasisElement> build_basis(const Germ& g, const FaceLattice& L,
                                      const Subdivision& S, const WeightFunction& W);

} // namespace nwspec
