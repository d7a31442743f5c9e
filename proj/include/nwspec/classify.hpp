// Monodromy-eigenvalue and Hodge classification of basis elements, spectral
// pair aggregation, and the symmetry checks.
#pragma once

#include "nwspec/basis.hpp"

#include <map>
#include <string>
#include <vector>

namespace nwspec {

struct HodgeClass {
    int p = 0;
    int q = 0;
    Rat chi;    // fractional part of h(point); 0 encodes eigenvalue 1
    int weight; // spectral-pair weight w
    Rat h;      // h(point)
};

// Key (alpha, w); value m_{alpha,w}.
struct SppKey {
    Rat alpha;
    int w;
    bool operator<(const SppKey& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        return w > o.w; // descending w at equal alpha, matching listing order
    }
    bool operator==(const SppKey& o) const { return alpha == o.alpha && w == o.w; }
};

using SpectralPairs = std::map<SppKey, long>;

// Key (p, q, chi as reduced fraction in [0,1)).
struct HodgeKey {
    int p = 0;
    int q = 0;
    Rat chi;
    bool operator<(const HodgeKey& o) const {
        if (p != o.p) return p < o.p;
        if (q != o.q) return q < o.q;
        return chi < o.chi;
    }
};

using HodgeTable = std::map<HodgeKey, long>;

HodgeClass classify(const BasisElement& e, const WeightFunction& W, int n);

SpectralPairs spectral_pairs(const std::vector<BasisElement>& elements,
                             const WeightFunction& W, int n);

HodgeTable hodge_table(const std::vector<BasisElement>& elements,
                       const WeightFunction& W, int n);

struct SymmetryReport {
    bool spp_symmetric = true;
    bool hodge_symmetric = true;
    bool total_is_mu = true;
    std::vector<std::string> counterexamples;
    bool ok() const { return spp_symmetric && hodge_symmetric && total_is_mu; }
};

// (a) Spp fixed by (alpha,w) -> (n-2-alpha, 2n-2-w); (b) h^{p,q}_chi =
// h^{n-1-p,n-1-q}_{chi^{-1}} away from eigenvalue 1 and h^{p,q}_1 =
// h^{n-p,n-q}_1; (c) total multiplicity equals mu when mu >= 0 is supplied.
SymmetryReport verify_symmetries(const SpectralPairs& spp, const HodgeTable& hodge,
                                 int n, long mu = -1);

} // namespace nwspec
