// Half-open parallelepiped cells of subdivision simplices and the canonical
// point reflection inside them.
#pragma once

#include "nwspec/subdivision.hpp"

#include <vector>

namespace nwspec {

struct HalfOpenCell {
    int simplex_id = -1;
    std::vector<ExpVec> generators;
    std::vector<ExpVec> points;              // lattice points with 0 <= b_i < 1
    std::vector<RatVec> coords;              // generator coordinates per point
};

// Exact enumeration; |points| equals |det(generators)|.
HalfOpenCell half_open_cell(const Simplex& s);

// Sum of the simplex generators minus the point. Throws internal_error on a
// negative coordinate in the result.
ExpVec canonical_copy(const Simplex& s, const ExpVec& alpha);

} // namespace nwspec
