#include "nwspec/subdivision.hpp"

#include <algorithm>
#include <functional>

namespace nwspec {

namespace {

// Pulling triangulation of a face, recursing through the lattice. Returns
// vertex sets of (dim F)-simplices covering F.
void pull_face(const FaceLattice& L, int face_id, std::vector<std::vector<ExpVec>>& out) {
    const Face& F = L.faces[face_id];
    if (static_cast<int>(F.vertices.size()) == F.dim + 1) {
        out.push_back(F.vertices);
        return;
    }
    const ExpVec& p = F.vertices.front(); // lexicographically least vertex
    // Facets of F inside the lattice: dim-1 faces contained in F.
    for (const auto& G : L.faces) {
        if (G.dim != F.dim - 1 || !L.contains(face_id, G.id)) continue;
        if (std::binary_search(G.vertices.begin(), G.vertices.end(), p)) continue;
        std::vector<std::vector<ExpVec>> sub;
        pull_face(L, G.id, sub);
        for (auto& tri : sub) {
            tri.push_back(p);
            std::sort(tri.begin(), tri.end());
            out.push_back(std::move(tri));
        }
    }
}

} // namespace

Subdivision triangulate(const FaceLattice& L) {
    Subdivision S;
    S.n = L.n;
    for (int fid : L.facets()) {
        const Face& F = L.faces[fid];
        if (affine_dim(F.vertices) != L.n - 1)
            throw internal_error("degenerate facet: vertices do not span dimension n-1");
        std::vector<std::vector<ExpVec>> pieces;
        pull_face(L, fid, pieces);
        for (auto& gens : pieces) {
            Simplex s;
            s.id = static_cast<int>(S.simplices.size());
            s.parent_face = fid;
            s.gens = std::move(gens);
            if (affine_dim(s.gens) != L.n - 1 || static_cast<int>(s.gens.size()) != L.n)
                throw internal_error("triangulation produced a degenerate simplex");
            S.simplices.push_back(std::move(s));
        }
    }
    return S;
}

WeightFunction weight_function(const Subdivision& S) {
    WeightFunction W;
    W.M = 1;
    for (const auto& s : S.simplices) {
        RatMat a = rows_from_points(s.gens);
        auto w = solve(a, RatVec(S.n, Rat(1)));
        if (!w) throw internal_error("singular vertex matrix in weight function");
        for (const auto& wi : *w) W.M = lcm_int(W.M, rat_den(wi));
        W.covectors.push_back(std::move(*w));
    }
    return W;
}

std::optional<RatVec> cone_coords(const Simplex& s, const ExpVec& p) {
    RatMat a(p.size(), RatVec(s.gens.size()));
    for (size_t c = 0; c < s.gens.size(); ++c)
        for (size_t r = 0; r < p.size(); ++r) a[r][c] = Rat(s.gens[c][r]);
    RatVec b;
    for (long x : p) b.emplace_back(x);
    auto sol = solve(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    for (const auto& bi : *sol)
        if (bi < 0) return std::nullopt;
    return sol;
}

std::pair<int, Rat> locate_and_evaluate(const WeightFunction& W, const Subdivision& S,
                                        const ExpVec& alpha) {
    ExpVec p(alpha);
    for (auto& c : p) c += 1;
    int fallback = -1;
    for (const auto& s : S.simplices) {
        auto b = cone_coords(s, p);
        if (!b) continue;
        bool in_closure = true;
        for (const auto& bi : *b)
            if (bi > 1) { in_closure = false; break; }
        if (in_closure) return {s.id, W.eval(s.id, p)};
        if (fallback < 0) fallback = s.id;
    }
    if (fallback >= 0) return {fallback, W.eval(fallback, p)};
    throw internal_error("point " + expvec_str(p) + " lies outside every cone");
}

} // namespace nwspec
