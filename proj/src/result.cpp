#include "nwspec/result.hpp"

#include "nwspec/parse.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace nwspec {

ComputationResult compute(const Germ& g, const ComputeOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    ComputationResult r;
    r.germ = g;

    r.convenient = is_convenient(g);
    if (!r.convenient)
        throw precondition_error("not convenient: axis " + missing_axis(g));
    r.lattice = compact_faces(g);
    r.simplicial = is_simplicial(r.lattice, g.n);
    if (!r.simplicial)
        throw precondition_error("Newton boundary is not simplicial");

    if (opt.check_nondegeneracy) {
        auto rep = nondegeneracy_check(g, r.lattice);
        switch (rep.overall) {
            case FaceVerdict::Finite: r.nondegeneracy = "finite"; break;
            case FaceVerdict::NotFinite:
                throw precondition_error("degenerate: some face ring is infinite-dimensional");
            case FaceVerdict::Unknown:
                throw precondition_error(
                    "could not certify nondegeneracy before the oracle ceiling");
        }
    }

    r.subdivision = triangulate(r.lattice);
    r.weights = weight_function(r.subdivision);
    r.mu = milnor_kouchnirenko(g);
    r.basis = build_basis(g, r.lattice, r.subdivision, r.weights);
    r.spp = spectral_pairs(r.basis, r.weights, g.n);
    r.hodge = hodge_table(r.basis, r.weights, g.n);

    auto sym = verify_symmetries(r.spp, r.hodge, g.n, r.mu);
    if (!sym.ok()) {
        std::string msg = "symmetry verification failed:";
        for (const auto& c : sym.counterexamples) msg += " " + c + ";";
        throw internal_error(msg);
    }

    if (opt.run_oracles) {
        r.oracles_ran = true;
        auto orc = milnor_oracle(g);
        if (!orc.stabilized)
            throw precondition_error("Milnor oracle did not stabilize; possibly non-isolated");
        r.oracle_mu = orc.mu;
        if (r.oracle_mu != r.mu)
            throw internal_error("Milnor number mismatch: combinatorial " +
                                 std::to_string(r.mu) + " vs oracle " +
                                 std::to_string(r.oracle_mu));
        for (const auto& s : r.subdivision.simplices) {
            long scan = volume_count_oracle(s);
            RatMat m = rows_from_points(s.gens);
            Rat d = det(m);
            Int expected = abs(rat_num(d) / rat_den(d));
            if (Int(scan) != expected)
                throw internal_error("cell count disagrees with |det| on simplex " +
                                     std::to_string(s.id));
        }
        auto danilov = danilov_hodge_numbers(r.lattice, r.subdivision, r.weights, g.n);
        auto cc = cross_check(danilov, r.hodge);
        if (!cc.equal) {
            std::string msg = "Danilov cross-check failed:";
            for (const auto& mline : cc.mismatches) msg += " " + mline + ";";
            throw internal_error(msg);
        }
    }

    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::string result_json(const ComputationResult& r) {
    nlohmann::json j;
    j["germ"] = format_germ(r.germ);
    j["variables"] = r.germ.vars;
    j["n"] = r.germ.n;
    j["mu"] = r.mu;
    j["M"] = r.weights.M.get_str();

    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [key, m] : r.spp) {
        nlohmann::json e;
        e["alpha"] = rat_str(key.alpha);
        e["w"] = key.w;
        e["multiplicity"] = m;
        pairs.push_back(e);
    }
    j["spectral_pairs"] = pairs;

    nlohmann::json hodge = nlohmann::json::array();
    for (const auto& [key, dim] : r.hodge) {
        nlohmann::json e;
        e["p"] = key.p;
        e["q"] = key.q;
        e["chi"] = rat_str(key.chi);
        e["dim"] = dim;
        hodge.push_back(e);
    }
    j["hodge"] = hodge;

    nlohmann::json basis = nlohmann::json::array();
    // Paper-style listing order: descending h, so the highest spectral
    // number comes first.
    std::vector<const BasisElement*> sorted;
    for (const auto& e : r.basis) sorted.push_back(&e);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
        Rat ha = r.weights.eval(a->owner, a->point);
        Rat hb = r.weights.eval(b->owner, b->point);
        if (ha != hb) return ha > hb;
        return a->point > b->point;
    });
    for (const auto* e : sorted)
        basis.push_back(format_monomial_compressed(e->monomial(), r.germ.vars));
    j["basis"] = basis;

    j["diagnostics"] = {{"convenient", r.convenient},
                        {"simplicial", r.simplicial},
                        {"nondegeneracy", r.nondegeneracy},
                        {"oracles_ran", r.oracles_ran},
                        {"oracle_mu", r.oracle_mu}};
    j["timing_ms"] = r.elapsed_ms;
    return j.dump(2);
}

std::string result_table(const ComputationResult& r) {
    std::ostringstream os;
    os << "germ: " << format_germ(r.germ) << "\n";
    os << "mu: " << r.mu << "\n";
    os << "M: " << r.weights.M.get_str() << "\n";
    os << "diagnostics: convenient=" << (r.convenient ? "yes" : "no")
       << " simplicial=" << (r.simplicial ? "yes" : "no")
       << " nondegeneracy=" << r.nondegeneracy << "\n";
    os << "spectral pairs (" << r.spp.size() << " entries):\n";
    for (const auto& [key, m] : r.spp)
        os << "  ((" << rat_str(key.alpha) << "," << key.w << ")," << m << ")\n";
    os << "hodge numbers:\n";
    for (const auto& [key, dim] : r.hodge)
        os << "  h^{" << key.p << "," << key.q << "}_{chi=" << rat_str(key.chi)
           << "} = " << dim << "\n";
    os << "timing: " << r.elapsed_ms << " ms\n";
    return os.str();
}

} // namespace nwspec
