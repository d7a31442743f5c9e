#include "nwspec/newton.hpp"

#include "nwspec/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nwspec {

bool in_convex_hull(const std::vector<ExpVec>& verts, const ExpVec& p) {
    if (verts.empty()) return false;
    int d = affine_dim(verts);
    RatVec pr;
    for (long c : p) pr.emplace_back(c);
    // Caratheodory: try affinely independent subsets of size d+1 (and the
    // degenerate smaller ones via exact barycentric solves).
    std::vector<size_t> idx(verts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<size_t> comb;
    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t need) -> bool {
        if (need == 0) {
            std::vector<ExpVec> sub;
            for (size_t i : comb) sub.push_back(verts[i]);
            if (affine_dim(sub) + 1 != static_cast<int>(sub.size())) return false;
            auto l = barycentric(sub, pr);
            if (!l) return false;
            for (const auto& w : *l)
                if (w < 0) return false;
            return true;
        }
        for (size_t i = start; i + need <= idx.size() + 1 && i < idx.size(); ++i) {
            comb.push_back(i);
            if (rec(i + 1, need - 1)) return true;
            comb.pop_back();
        }
        return false;
    };
    for (size_t k = 1; k <= static_cast<size_t>(d) + 1; ++k) {
        comb.clear();
        if (rec(0, k)) return true;
    }
    return false;
}

namespace {

// Extreme points of conv(pts): p is kept iff p not in conv(pts \ {p}).
std::vector<ExpVec> extreme_points(std::vector<ExpVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<ExpVec> result;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<ExpVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_convex_hull(others, pts[i])) result.push_back(pts[i]);
    }
    return result;
}

// Project points to a coordinate subset on which the affine hull is injective.
std::vector<size_t> injective_axes(const std::vector<ExpVec>& pts, int d) {
    const size_t n = pts[0].size();
    std::vector<size_t> axes(n);
    for (size_t i = 0; i < n; ++i) axes[i] = i;
    // Greedy: find d coordinates giving full rank of the difference matrix.
    std::vector<size_t> chosen;
    for (size_t c = 0; c < n && static_cast<int>(chosen.size()) < d; ++c) {
        chosen.push_back(c);
        RatMat m;
        for (size_t i = 1; i < pts.size(); ++i) {
            RatVec row;
            for (size_t cc : chosen) row.emplace_back(pts[i][cc] - pts[0][cc]);
            m.push_back(std::move(row));
        }
        if (rank(m) != chosen.size()) chosen.pop_back();
    }
    return chosen;
}

// Faces of a polytope given by its extreme points, via recursive facet
// enumeration inside the affine hull. Returns vertex sets of every face
// (including the polytope itself), each sorted.
void polytope_faces(const std::vector<ExpVec>& verts, std::set<std::vector<ExpVec>>& out) {
    std::vector<ExpVec> v = verts;
    std::sort(v.begin(), v.end());
    if (out.count(v)) return;
    out.insert(v);
    int d = affine_dim(v);
    if (d <= 0) return;

    auto axes = injective_axes(v, d);
    // d-dimensional projected coordinates
    std::vector<RatVec> proj;
    for (const auto& p : v) {
        RatVec row;
        for (size_t c : axes) row.emplace_back(p[c]);
        proj.push_back(std::move(row));
    }

    // Enumerate supporting hyperplanes spanned by d vertices.
    std::set<std::vector<ExpVec>> facet_sets;
    std::vector<size_t> comb;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (comb.size() == static_cast<size_t>(d)) {
            // Hyperplane a.x = b through proj[comb]: null space of the
            // homogeneous system (a, -b) . (x, 1) = 0.
            RatMat m;
            for (size_t i : comb) {
                RatVec row = proj[i];
                row.emplace_back(1);
                m.push_back(std::move(row));
            }
            // Find a nonzero null vector by Gauss.
            size_t cols = static_cast<size_t>(d) + 1;
            RatMat a = m;
            std::vector<size_t> piv;
            size_t r = 0;
            for (size_t c = 0; c < cols && r < a.size(); ++c) {
                size_t p = r;
                while (p < a.size() && a[p][c] == 0) ++p;
                if (p == a.size()) continue;
                std::swap(a[p], a[r]);
                Rat inv = a[r][c];
                for (size_t cc = 0; cc < cols; ++cc) a[r][cc] /= inv;
                for (size_t rr = 0; rr < a.size(); ++rr) {
                    if (rr == r) continue;
                    Rat f = a[rr][c];
                    if (f == 0) continue;
                    for (size_t cc = 0; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
                }
                piv.push_back(c);
                ++r;
            }
            if (piv.size() != static_cast<size_t>(d)) return; // degenerate subset
            // Free column -> null vector.
            std::vector<bool> is_piv(cols, false);
            for (size_t c : piv) is_piv[c] = true;
            size_t free_c = 0;
            while (free_c < cols && is_piv[free_c]) ++free_c;
            RatVec nv(cols, Rat(0));
            nv[free_c] = 1;
            for (size_t i = 0; i < piv.size(); ++i) nv[piv[i]] = -a[i][free_c];
            // Evaluate sign over all vertices.
            bool any_pos = false, any_neg = false;
            std::vector<bool> on(v.size(), false);
            for (size_t i = 0; i < v.size(); ++i) {
                Rat s(0);
                for (int c = 0; c < d; ++c) s += nv[c] * proj[i][c];
                s += nv[d];
                if (s > 0) any_pos = true;
                else if (s < 0) any_neg = true;
                else on[i] = true;
            }
            if (any_pos && any_neg) return; // not supporting
            std::vector<ExpVec> fs;
            for (size_t i = 0; i < v.size(); ++i)
                if (on[i]) fs.push_back(v[i]);
            if (fs.size() == v.size()) return; // whole polytope
            std::sort(fs.begin(), fs.end());
            facet_sets.insert(fs);
            return;
        }
        for (size_t i = start; i < v.size(); ++i) {
            comb.push_back(i);
            rec(i + 1);
            comb.pop_back();
        }
    };
    rec(0);

    for (const auto& fs : facet_sets) polytope_faces(fs, out);
}

std::vector<int> zero_axes_of(const std::vector<ExpVec>& verts, int n) {
    std::vector<int> z;
    for (int c = 0; c < n; ++c) {
        bool all0 = true;
        for (const auto& v : verts)
            if (v[c] != 0) { all0 = false; break; }
        if (all0) z.push_back(c);
    }
    return z;
}

} // namespace

bool FaceLattice::contains(int outer, int inner) const {
    const auto& a = faces[outer].vertices;
    const auto& b = faces[inner].vertices;
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

const Face* FaceLattice::find_by_vertices(const std::vector<ExpVec>& verts) const {
    std::vector<ExpVec> key = verts;
    std::sort(key.begin(), key.end());
    for (const auto& f : faces)
        if (f.vertices == key) return &f;
    return nullptr;
}

std::vector<int> FaceLattice::facets() const {
    std::vector<int> ids;
    for (const auto& f : faces)
        if (f.dim == n - 1) ids.push_back(f.id);
    return ids;
}

std::vector<int> FaceLattice::vertices() const {
    std::vector<int> ids;
    for (const auto& f : faces)
        if (f.dim == 0) ids.push_back(f.id);
    return ids;
}

int FaceLattice::minimal_face_containing(const std::vector<ExpVec>& pts) const {
    int best = -1;
    for (const auto& f : faces) {
        bool ok = true;
        for (const auto& p : pts)
            if (!std::binary_search(f.vertices.begin(), f.vertices.end(), p)) { ok = false; break; }
        if (ok && (best < 0 || f.vertices.size() < faces[best].vertices.size())) best = f.id;
    }
    return best;
}

int FaceLattice::count_parents_one_up(int face_id) const {
    int cnt = 0;
    for (const auto& f : faces)
        if (f.dim == faces[face_id].dim + 1 && contains(f.id, face_id)) ++cnt;
    return cnt;
}

FaceLattice compact_faces(const Germ& g) {
    if (!is_convenient(g))
        throw precondition_error("not convenient: axis " + missing_axis(g));

    const int n = g.n;
    auto supp = g.support();

    // Facet covectors: solutions of w.v = 1 over n-subsets of the support,
    // strictly positive and supporting the whole diagram.
    std::set<RatVec> covectors;
    std::vector<size_t> comb;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (comb.size() == static_cast<size_t>(n)) {
            RatMat a;
            for (size_t i : comb) {
                RatVec row;
                for (long c : supp[i]) row.emplace_back(c);
                a.push_back(std::move(row));
            }
            auto w = solve(a, RatVec(n, Rat(1)));
            if (w) {
                bool pos = true;
                for (const auto& wi : *w)
                    if (wi <= 0) { pos = false; break; }
                if (pos) {
                    bool supporting = true;
                    for (const auto& u : supp) {
                        Rat s(0);
                        for (int c = 0; c < n; ++c) s += (*w)[c] * Rat(u[c]);
                        if (s < 1) { supporting = false; break; }
                    }
                    if (supporting) covectors.insert(*w);
                }
            }
            return;
        }
        for (size_t i = start; i < supp.size(); ++i) {
            comb.push_back(i);
            rec(i + 1);
            comb.pop_back();
        }
    };
    if (n == 1) {
        // Single axis: the diagram is one vertex, the lowest pure power.
        long lo = -1;
        for (const auto& [e, c] : g.terms)
            if (lo < 0 || e[0] < lo) lo = e[0];
        covectors.insert(RatVec{Rat(1, lo)});
    } else {
        rec(0);
    }

    // Facet vertex sets and their full face structure.
    std::map<std::vector<ExpVec>, RatVec> facet_cov;
    std::set<std::vector<ExpVec>> all_face_sets;
    for (const auto& w : covectors) {
        std::vector<ExpVec> on;
        for (const auto& u : supp) {
            Rat s(0);
            for (int c = 0; c < n; ++c) s += w[c] * Rat(u[c]);
            if (s == 1) on.push_back(u);
        }
        auto verts = extreme_points(on);
        std::sort(verts.begin(), verts.end());
        if (affine_dim(verts) != n - 1) continue; // lower-dimensional support slice
        facet_cov[verts] = w;
        polytope_faces(verts, all_face_sets);
    }
    if (facet_cov.empty())
        throw precondition_error("Newton diagram has no compact facet");

    FaceLattice L;
    L.n = n;
    std::vector<std::vector<ExpVec>> ordered(all_face_sets.begin(), all_face_sets.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) {
                         int da = affine_dim(a), db = affine_dim(b);
                         if (da != db) return da < db;
                         return a < b;
                     });
    for (const auto& vs : ordered) {
        Face f;
        f.id = static_cast<int>(L.faces.size());
        f.vertices = vs;
        f.dim = affine_dim(vs);
        f.zero_axes = zero_axes_of(vs, n);
        L.faces.push_back(std::move(f));
    }

    // Covectors: facets keep their defining covector, lower faces average
    // the covectors of the facets containing them (still supporting).
    for (auto& f : L.faces) {
        auto it = facet_cov.find(f.vertices);
        if (it != facet_cov.end()) {
            f.covector = it->second;
            continue;
        }
        RatVec acc(n, Rat(0));
        int cnt = 0;
        for (const auto& [verts, w] : facet_cov) {
            if (std::includes(verts.begin(), verts.end(), f.vertices.begin(), f.vertices.end())) {
                for (int c = 0; c < n; ++c) acc[c] += w[c];
                ++cnt;
            }
        }
        if (cnt == 0) throw internal_error("compact face not contained in any facet");
        for (int c = 0; c < n; ++c) acc[c] /= cnt;
        f.covector = acc;
    }

    for (auto& f : L.faces)
        for (const auto& g2 : L.faces)
            if (g2.dim == n - 1 && L.contains(g2.id, f.id)) f.parent_facets.push_back(g2.id);

    // Intersection closure sanity: common vertices of two faces must be a face.
    for (const auto& a : L.faces)
        for (const auto& b : L.faces) {
            if (a.id >= b.id) continue;
            std::vector<ExpVec> common;
            std::set_intersection(a.vertices.begin(), a.vertices.end(),
                                  b.vertices.begin(), b.vertices.end(),
                                  std::back_inserter(common));
            if (!common.empty() && !L.find_by_vertices(common))
                throw internal_error("face lattice not closed under intersection");
        }

    return L;
}

bool is_simplicial(const FaceLattice& L, int n) {
    for (const auto& f : L.faces) {
        if (f.dim == n - 1) continue;
        if (L.count_parents_one_up(f.id) > n - f.dim) return false;
    }
    return true;
}

std::vector<Rat> volumes(const Germ& g) {
    if (!is_convenient(g))
        throw precondition_error("not convenient: axis " + missing_axis(g));
    const int n = g.n;
    std::vector<Rat> V(n + 1, Rat(0)); // V[k]

    // Every k-subset of axes carries the restricted germ's under-diagram.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> axes;
        for (int c = 0; c < n; ++c)
            if (mask & (1u << c)) axes.push_back(c);
        const int k = static_cast<int>(axes.size());

        Germ sub;
        sub.n = k;
        for (int c : axes) sub.vars.push_back(g.vars[c]);
        for (const auto& [e, coeff] : g.terms) {
            bool inside = true;
            for (int c = 0; c < n; ++c)
                if (e[c] != 0 && !(mask & (1u << c))) { inside = false; break; }
            if (!inside) continue;
            ExpVec re(k);
            for (int i = 0; i < k; ++i) re[i] = e[axes[i]];
            sub.terms[re] += coeff;
        }
        std::map<ExpVec, Rat> cleaned;
        for (auto& [e, c] : sub.terms)
            if (c != 0) cleaned.emplace(e, c);
        sub.terms = std::move(cleaned);
        if (sub.terms.empty())
            throw precondition_error("not convenient: axis " + g.vars[axes[0]]);

        auto L = compact_faces(sub);
        auto S = triangulate(L);
        Rat vol(0);
        Rat kfact(1);
        for (int i = 2; i <= k; ++i) kfact *= i;
        for (const auto& simplex : S.simplices) {
            RatMat m = rows_from_points(simplex.gens);
            Rat d = det(m);
            vol += abs(d) / kfact;
        }
        V[k] += vol;
    }
    return std::vector<Rat>(V.begin() + 1, V.end()); // V_1..V_n
}

long milnor_kouchnirenko(const Germ& g) {
    const int n = g.n;
    auto V = volumes(g);
    Rat total(0);
    Rat kfact(1);
    for (int k = 1; k <= n; ++k) {
        kfact *= k;
        Rat term = kfact * V[k - 1];
        total += ((n - k) % 2 == 0) ? term : -term;
    }
    total += (n % 2 == 0) ? Rat(1) : Rat(-1);
    if (!is_integer(total))
        throw internal_error("Kouchnirenko total is not an integer: " + rat_str(total));
    return to_long(rat_num(total));
}

std::string face_lattice_json(const FaceLattice& L) {
    std::ostringstream os;
    os << "{\"n\":" << L.n << ",\"faces\":[";
    for (size_t i = 0; i < L.faces.size(); ++i) {
        const auto& f = L.faces[i];
        if (i) os << ",";
        os << "{\"id\":" << f.id << ",\"dim\":" << f.dim << ",\"vertices\":[";
        for (size_t v = 0; v < f.vertices.size(); ++v) {
            if (v) os << ",";
            os << "[";
            for (size_t c = 0; c < f.vertices[v].size(); ++c) {
                if (c) os << ",";
                os << f.vertices[v][c];
            }
            os << "]";
        }
        os << "],\"covector\":[";
        for (size_t c = 0; c < f.covector.size(); ++c) {
            if (c) os << ",";
            os << "\"" << rat_str(f.covector[c]) << "\"";
        }
        os << "]}";
    }
    os << "],\"containment\":[";
    bool first = true;
    for (const auto& a : L.faces)
        for (const auto& b : L.faces) {
            if (a.id == b.id || a.dim <= b.dim) continue;
            if (L.contains(a.id, b.id)) {
                if (!first) os << ",";
                os << "[" << a.id << "," << b.id << "]";
                first = false;
            }
        }
    os << "]}";
    return os.str();
}

} // namespace nwspec
