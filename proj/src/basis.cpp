#include "nwspec/basis.hpp"

#include "nwspec/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace nwspec {

namespace {

using SkelKey = std::vector<ExpVec>; // sorted generator list

struct SkelClass {
    SkelKey gens;
    std::vector<int> incident;        // simplex ids containing all generators, ascending
    std::set<ExpVec> points;          // open-cell lattice points (all generator coords in (0,1))
    std::vector<int> common_zero_axes;
    int min_face = -1;
    bool internal_skeleton = false;
};

bool subset_of(const SkelKey& k, const std::vector<ExpVec>& gens) {
    for (const auto& g : k)
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) return false;
    return true;
}

// Half-open membership of p in the span of gens: coords in [0,1).
bool in_halfopen(const SkelKey& gens, const ExpVec& p) {
    const size_t dim = p.size();
    RatMat a(dim, RatVec(gens.size()));
    for (size_t c = 0; c < gens.size(); ++c)
        for (size_t r = 0; r < dim; ++r) a[r][c] = Rat(gens[c][r]);
    RatVec b;
    for (long x : p) b.emplace_back(x);
    auto sol = solve(std::move(a), std::move(b));
    if (!sol) return false;
    for (const auto& bi : *sol)
        if (bi < 0 || bi >= 1) return false;
    return true;
}

std::vector<int> support_axes(const ExpVec& p) {
    std::vector<int> s;
    for (size_t c = 0; c < p.size(); ++c)
        if (p[c] != 0) s.push_back(static_cast<int>(c));
    return s;
}

} // namespace

std::vector<BasisElement> build_basis(const Germ& g, const FaceLattice& L,
                                      const Subdivision& S, const WeightFunction& W) {
    const int n = g.n;
    if (!is_convenient(g))
        throw precondition_error("not convenient: axis " + missing_axis(g));
    if (!is_simplicial(L, n))
        throw precondition_error("Newton boundary is not simplicial");

    const long mu = milnor_kouchnirenko(g);

    std::vector<HalfOpenCell> cells;
    cells.reserve(S.simplices.size());
    for (const auto& s : S.simplices) cells.push_back(half_open_cell(s));

    // All skeleton classes: every nonempty proper generator subset of every
    // simplex, plus the full simplices themselves (needed for multiplicity
    // counts below).
    std::map<SkelKey, SkelClass> classes;
    for (const auto& s : S.simplices) {
        const size_t m = s.gens.size();
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            SkelKey key;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) key.push_back(s.gens[i]);
            std::sort(key.begin(), key.end());
            classes[key]; // create
        }
    }
    for (auto& [key, cls] : classes) {
        cls.gens = key;
        for (const auto& s : S.simplices)
            if (subset_of(key, s.gens)) cls.incident.push_back(s.id);
        for (int c = 0; c < n; ++c) {
            bool all0 = true;
            for (const auto& gen : key)
                if (gen[c] != 0) { all0 = false; break; }
            if (all0) cls.common_zero_axes.push_back(c);
        }
        cls.min_face = L.minimal_face_containing(key);
        if (cls.min_face < 0)
            throw internal_error("skeleton generators not contained in any boundary face");
        cls.internal_skeleton =
            L.faces[cls.min_face].dim + 1 > static_cast<int>(key.size());
    }

    std::vector<BasisElement> out;
    std::set<ExpVec> registry;
    auto emit = [&](BasisElement e) {
        if (!registry.insert(e.point).second)
            throw internal_error("duplicate basis point " + expvec_str(e.point));
        for (long c : e.point)
            if (c < 1)
                throw internal_error("basis point with non-positive coordinate " +
                                     expvec_str(e.point));
        out.push_back(std::move(e));
    };

    // Phase A: interior cell points and skeleton originals.
    for (size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        const auto& simplex = S.simplices[ci];
        for (size_t pi = 0; pi < cell.points.size(); ++pi) {
            SkelKey key;
            for (size_t gi = 0; gi < simplex.gens.size(); ++gi)
                if (cell.coords[pi][gi] > 0) key.push_back(simplex.gens[gi]);
            if (key.empty()) continue; // origin
            std::sort(key.begin(), key.end());
            if (key.size() == static_cast<size_t>(n)) {
                BasisElement e;
                e.point = cell.points[pi];
                e.owner = simplex.id;
                e.kind = BasisElement::Kind::Interior;
                e.source = e.point;
                e.skel_hat_dim = n;
                e.min_face = simplex.parent_face;
                emit(std::move(e));
            } else {
                classes.at(key).points.insert(cell.points[pi]);
            }
        }
    }

    // Skeleton originals and canonical copies (forced placements), in
    // deterministic key order.
    for (auto& [key, cls] : classes) {
        const int dhat = static_cast<int>(key.size());
        if (dhat >= n || cls.points.empty() || !cls.common_zero_axes.empty()) continue;
        const int k = static_cast<int>(cls.incident.size());
        if (!cls.internal_skeleton && k != n - dhat + 1)
            throw precondition_error(
                "simplicial copy placement impossible at skeleton of dimension " +
                std::to_string(dhat) + " shared by " + std::to_string(k) + " cones");
        if (k < 2) throw internal_error("interior skeleton with a single incident cone");

        const Simplex& owner0 = S.simplices[cls.incident.front()];
        for (const auto& p : cls.points) {
            BasisElement e;
            e.point = p;
            e.owner = owner0.id;
            e.kind = BasisElement::Kind::SkeletonPoint;
            e.skeleton = key;
            e.source = p;
            e.rung = 0;
            e.skel_hat_dim = dhat;
            e.internal_skeleton = cls.internal_skeleton;
            e.min_face = cls.min_face;
            emit(std::move(e));
        }
        for (const auto& p : cls.points) {
            BasisElement e;
            e.point = canonical_copy(owner0, p);
            e.owner = owner0.id;
            e.kind = BasisElement::Kind::SkeletonCopy;
            e.skeleton = key;
            e.source = p;
            e.rung = k - 1;
            e.canonical = true;
            e.skel_hat_dim = dhat;
            e.internal_skeleton = cls.internal_skeleton;
            e.min_face = cls.min_face;
            emit(std::move(e));
        }
    }

    // Phase B: placements with freedom, all collision-checked against the
    // registry. Translation candidates are sums of `count` generators of the
    // target simplex (multisets in index order), with a level-slice fallback.
    auto pick_translation = [&](const Simplex& target, int count,
                                const std::vector<ExpVec>& pts) -> std::optional<ExpVec> {
        std::vector<ExpVec> sums;
        std::function<void(size_t, int, ExpVec)> rec = [&](size_t start, int left, ExpVec acc) {
            if (left == 0) {
                sums.push_back(acc);
                return;
            }
            for (size_t i = start; i < target.gens.size(); ++i)
                rec(i, left - 1, expvec_add(acc, target.gens[i]));
        };
        rec(0, count, ExpVec(n, 0));
        for (const auto& w : sums) {
            bool ok = true;
            for (const auto& p : pts) {
                ExpVec q = expvec_add(p, w);
                for (long c : q)
                    if (c < 1) { ok = false; break; }
                if (!ok || registry.count(q)) { ok = false; break; }
            }
            if (ok) return w;
        }
        return std::nullopt;
    };

    // Middle copies of shared skeletons, one per remaining incident cone.
    for (auto& [key, cls] : classes) {
        const int dhat = static_cast<int>(key.size());
        if (dhat >= n || cls.points.empty() || !cls.common_zero_axes.empty()) continue;
        const int k = static_cast<int>(cls.incident.size());
        std::vector<ExpVec> pts(cls.points.begin(), cls.points.end());
        for (int j = 1; j <= k - 2; ++j) {
            const Simplex& target = S.simplices[cls.incident[j]];
            auto w = pick_translation(target, j, pts);
            if (!w)
                throw internal_error("no placement for middle copy of skeleton at rung " +
                                     std::to_string(j));
            for (const auto& p : pts) {
                BasisElement e;
                e.point = expvec_add(p, *w);
                e.owner = target.id;
                e.kind = BasisElement::Kind::SkeletonCopy;
                e.skeleton = key;
                e.source = p;
                e.rung = j;
                e.skel_hat_dim = dhat;
                e.internal_skeleton = cls.internal_skeleton;
                e.min_face = cls.min_face;
                emit(std::move(e));
            }
        }
    }

    // Vertex towers: each boundary vertex off the coordinate planes enters
    // once per incident cone minus one, at consecutive integral levels.
    for (int vid : L.vertices()) {
        const ExpVec v = L.faces[vid].vertices.front();
        if (!support_axes(v).empty() &&
            support_axes(v).size() == static_cast<size_t>(n)) {
            std::vector<int> incident;
            for (const auto& s : S.simplices)
                if (std::find(s.gens.begin(), s.gens.end(), v) != s.gens.end())
                    incident.push_back(s.id);
            const int kv = static_cast<int>(incident.size());
            for (int j = 1; j <= kv - 1; ++j) {
                BasisElement e;
                e.kind = BasisElement::Kind::VertexTower;
                e.skeleton = {v};
                e.source = v;
                e.rung = j;
                e.skel_hat_dim = 1;
                e.min_face = vid;
                if (j == 1) {
                    e.point = v;
                    e.owner = incident.front();
                } else {
                    const Simplex& target = S.simplices[incident[(j - 1) % kv]];
                    auto w = pick_translation(target, j - 1, {v});
                    if (!w)
                        throw internal_error("no placement for vertex tower level " +
                                             std::to_string(j));
                    e.point = expvec_add(v, *w);
                    e.owner = target.id;
                }
                emit(std::move(e));
            }
        }
    }

    // Coordinate-plane skeleton points re-enter in shifted copies when their
    // signed multiplicity over all coordinate-plane tilings is positive.
    auto net_multiplicity = [&](const ExpVec& p) -> int {
        auto supp = support_axes(p);
        std::vector<int> rest;
        for (int c = 0; c < n; ++c)
            if (std::find(supp.begin(), supp.end(), c) == std::end(supp)) rest.push_back(c);
        int net = 0;
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            std::vector<int> Sax = supp;
            for (size_t i = 0; i < rest.size(); ++i)
                if (mask & (1u << i)) Sax.push_back(rest[i]);
            std::sort(Sax.begin(), Sax.end());
            int mult = 0;
            for (const auto& [key, cls] : classes) {
                if (key.size() != Sax.size()) continue;
                bool in_plane = true;
                for (const auto& gen : key) {
                    for (int ax : support_axes(gen))
                        if (!std::binary_search(Sax.begin(), Sax.end(), ax)) {
                            in_plane = false;
                            break;
                        }
                    if (!in_plane) break;
                }
                if (!in_plane) continue;
                if (in_halfopen(key, p)) ++mult;
            }
            net += ((n - static_cast<int>(Sax.size())) % 2 == 0) ? mult : -mult;
        }
        return net;
    };

    for (auto& [key, cls] : classes) {
        const int dhat = static_cast<int>(key.size());
        if (dhat >= n || cls.points.empty() || cls.common_zero_axes.empty()) continue;
        const int k = static_cast<int>(cls.incident.size());
        for (const auto& p : cls.points) {
            int net = net_multiplicity(p);
            if (net < 0)
                throw internal_error("negative net multiplicity at " + expvec_str(p));
            for (int s = 1; s <= net; ++s) {
                const Simplex& target = S.simplices[cls.incident[(s - 1) % k]];
                auto w = pick_translation(target, s, {p});
                if (!w)
                    throw internal_error("no placement for shifted copy of " + expvec_str(p));
                BasisElement e;
                e.point = expvec_add(p, *w);
                e.owner = target.id;
                e.kind = BasisElement::Kind::CoordShift;
                e.skeleton = key;
                e.source = p;
                e.rung = s;
                e.skel_hat_dim = dhat;
                e.internal_skeleton = cls.internal_skeleton;
                e.min_face = cls.min_face;
                emit(std::move(e));
            }
        }
    }

    if (static_cast<long>(out.size()) != mu)
        throw internal_error("basis cardinality " + std::to_string(out.size()) +
                             " does not match Milnor number " + std::to_string(mu));
    return out;
}

} // namespace nwspec
