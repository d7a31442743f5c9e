// Hodge numbers recomputed from graded lattice-point generating functions
// over the face poset, independent of the basis/copy construction.
#pragma once

#include "nwspec/classify.hpp"
#include "nwspec/subdivision.hpp"

#include <map>
#include <string>
#include <vector>

namespace nwspec {

// Polynomial with rational exponents and integer coefficients.
using FracPoly = std::map<Rat, long>;

FracPoly fp_add(const FracPoly& a, const FracPoly& b);
FracPoly fp_sub(const FracPoly& a, const FracPoly& b);
FracPoly fp_mul(const FracPoly& a, const FracPoly& b, const Rat& cap);
FracPoly fp_shift(const FracPoly& a, const Rat& dh);
long fp_eval_at_one(const FracPoly& a);

// Truncated Poincare series of the graded semigroup ring of cone(tau) for a
// simplex face tau, as a power series in t up to the cap (default n+1).
FracPoly poincare_cone(const std::vector<ExpVec>& simplex_verts, const Subdivision& S,
                       const WeightFunction& W, int cap = 0);

// (1-t)^k * P summed at t=1: the normalized volume / cell count of (1.7)-type
// identities. Exact because the numerator polynomial has degree < k.
long poincare_volume_evaluation(const FracPoly& series, int k, int cap);

// Full mixed Hodge table by per-face box series, ladders and towers.
HodgeTable danilov_hodge_numbers(const FaceLattice& L, const Subdivision& S,
                                 const WeightFunction& W, int n);

struct CrossCheckReport {
    bool equal = true;
    std::vector<std::string> mismatches;
};

CrossCheckReport cross_check(const HodgeTable& a, const HodgeTable& b);

} // namespace nwspec
