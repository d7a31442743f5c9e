// Full pipeline driver and result serialization.
#pragma once

#include "nwspec/basis.hpp"
#include "nwspec/classify.hpp"
#include "nwspec/danilov.hpp"
#include "nwspec/newton.hpp"
#include "nwspec/oracle.hpp"
#include "nwspec/spp_io.hpp"

#include <string>

namespace nwspec {

struct ComputeOptions {
    bool check_nondegeneracy = true; // certify via the face rings before computing
    bool run_oracles = false;        // Milnor oracle, volume counts, cross-check
};

struct ComputationResult {
    Germ germ;
    FaceLattice lattice;
    Subdivision subdivision;
    WeightFunction weights;
    long mu = 0;
    std::vector<BasisElement> basis;
    SpectralPairs spp;
    HodgeTable hodge;

    bool convenient = false;
    bool simplicial = false;
    std::string nondegeneracy = "skipped"; // finite | not-finite | unknown | skipped
    bool oracles_ran = false;
    long oracle_mu = -1;
    double elapsed_ms = 0.0;
};

ComputationResult compute(const Germ& g, const ComputeOptions& opt = {});

std::string result_json(const ComputationResult& r);
std::string result_table(const ComputationResult& r);

} // namespace nwspec
