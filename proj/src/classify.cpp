#include "nwspec/classify.hpp"

namespace nwspec {

HodgeClass classify(const BasisElement& e, const WeightFunction& W, int n) {
    HodgeClass hc;
    hc.h = W.eval(e.owner, e.point);
    hc.chi = frac_part(hc.h);

    // Weight by structural class: interior points and subdivision-internal
    // skeleton copies sit at the middle weight; skeletons of an actual
    // boundary face descend two per ladder rung; vertex towers are the
    // integral-level ladder of the vertex itself.
    int w;
    switch (e.kind) {
        case BasisElement::Kind::Interior:
            w = n - 1;
            break;
        case BasisElement::Kind::VertexTower:
            w = 2 * (n - e.rung) - 1;
            break;
        default:
            w = e.internal_skeleton ? n - 1 : 2 * n - 1 - e.skel_hat_dim - 2 * e.rung;
            break;
    }
    hc.weight = w;

    if (hc.chi == 0) {
        if (!is_integer(hc.h)) throw internal_error("chi==0 with fractional h");
        hc.p = n - static_cast<int>(to_long(rat_num(hc.h)));
        hc.q = w + 1 - hc.p;
    } else {
        hc.p = n - static_cast<int>(to_long(ceil_rat(hc.h)));
        hc.q = w - hc.p;
    }
    if (hc.p < 0 || hc.p > n || hc.q < 0 || hc.q > n)
        throw internal_error("unclassifiable basis element at " + expvec_str(e.point) +
                             " (h=" + rat_str(hc.h) + ", w=" + std::to_string(w) + ")");
    return hc;
}

SpectralPairs spectral_pairs(const std::vector<BasisElement>& elements,
                             const WeightFunction& W, int n) {
    SpectralPairs spp;
    for (const auto& e : elements) {
        HodgeClass hc = classify(e, W, n);
        Rat alpha = hc.h - 1;
        if (alpha <= -1 || alpha >= n - 1)
            throw internal_error("spectral number out of range at " + expvec_str(e.point));
        spp[SppKey{alpha, hc.weight}] += 1;
    }
    return spp;
}

HodgeTable hodge_table(const std::vector<BasisElement>& elements,
                       const WeightFunction& W, int n) {
    HodgeTable t;
    for (const auto& e : elements) {
        HodgeClass hc = classify(e, W, n);
        t[HodgeKey{hc.p, hc.q, hc.chi}] += 1;
    }
    return t;
}

SymmetryReport verify_symmetries(const SpectralPairs& spp, const HodgeTable& hodge,
                                 int n, long mu) {
    SymmetryReport r;
    for (const auto& [key, m] : spp) {
        SppKey mirror{Rat(n - 2) - key.alpha, 2 * n - 2 - key.w};
        auto it = spp.find(mirror);
        if (it == spp.end() || it->second != m) {
            r.spp_symmetric = false;
            r.counterexamples.push_back("Spp((" + rat_str(key.alpha) + "," +
                                        std::to_string(key.w) + "))=" + std::to_string(m) +
                                        " has no mirror match");
        }
    }
    for (const auto& [key, m] : hodge) {
        HodgeKey mirror;
        if (key.chi == 0) {
            mirror = HodgeKey{n - key.p, n - key.q, Rat(0)};
        } else {
            mirror = HodgeKey{n - 1 - key.p, n - 1 - key.q, Rat(1) - key.chi};
        }
        auto it = hodge.find(mirror);
        if (it == hodge.end() || it->second != m) {
            r.hodge_symmetric = false;
            r.counterexamples.push_back("h^{" + std::to_string(key.p) + "," +
                                        std::to_string(key.q) + "}_{chi=" + rat_str(key.chi) +
                                        "}=" + std::to_string(m) + " has no mirror match");
        }
    }
    if (mu >= 0) {
        long total = 0;
        for (const auto& [key, m] : spp) total += m;
        if (total != mu) {
            r.total_is_mu = false;
            r.counterexamples.push_back("total multiplicity " + std::to_string(total) +
                                        " != mu " + std::to_string(mu));
        }
    }
    return r;
}

} // namespace nwspec
