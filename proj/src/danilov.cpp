#include "nwspec/danilov.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nwspec {

FracPoly fp_add(const FracPoly& a, const FracPoly& b) {
    FracPoly r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

FracPoly fp_sub(const FracPoly& a, const FracPoly& b) {
    FracPoly r = a;
    for (const auto& [e, c] : b) {
        r[e] -= c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

FracPoly fp_mul(const FracPoly& a, const FracPoly& b, const Rat& cap) {
    FracPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rat e = ea + eb;
            if (e > cap) continue;
            r[e] += ca * cb;
            if (r[e] == 0) r.erase(e);
        }
    return r;
}

FracPoly fp_shift(const FracPoly& a, const Rat& dh) {
    FracPoly r;
    for (const auto& [e, c] : a) r[e + dh] = c;
    return r;
}

long fp_eval_at_one(const FracPoly& a) {
    long s = 0;
    for (const auto& [e, c] : a) s += c;
    return s;
}

namespace {

// Graded lattice-point series of cone(gens) up to h <= cap, h evaluated with
// the given covector (all generators sit at level 1).
FracPoly cone_series(const std::vector<ExpVec>& gens, const RatVec& cov, int cap) {
    FracPoly out;
    if (gens.empty()) {
        out[Rat(0)] = 1;
        return out;
    }
    const size_t dim = gens[0].size();
    std::vector<long> hi(dim, 0);
    for (size_t c = 0; c < dim; ++c) {
        long m = 0;
        for (const auto& g : gens) m = std::max(m, g[c]);
        hi[c] = m * cap;
    }
    RatMat a(dim, RatVec(gens.size()));
    for (size_t c = 0; c < gens.size(); ++c)
        for (size_t r = 0; r < dim; ++r) a[r][c] = Rat(gens[c][r]);

    ExpVec p(dim, 0);
    std::function<void(size_t, Rat)> scan = [&](size_t axis, Rat hmin) {
        if (axis == dim) {
            RatVec b;
            for (long x : p) b.emplace_back(x);
            auto sol = solve(a, b);
            if (!sol) return;
            Rat h(0);
            for (const auto& bi : *sol) {
                if (bi < 0) return;
                h += bi;
            }
            if (h > cap) return;
            out[h] += 1;
            return;
        }
        for (long x = 0; x <= hi[axis]; ++x) {
            // Cheap pruning: h grows with every coordinate when cov > 0.
            Rat h = hmin + cov[axis] * Rat(x);
            if (h > cap) break;
            p[axis] = x;
            scan(axis + 1, h);
        }
        p[axis] = 0;
    };
    scan(0, Rat(0));
    return out;
}

FracPoly one_minus_t_pow(int k, const Rat& cap) {
    FracPoly base;
    base[Rat(0)] = 1;
    base[Rat(1)] = -1;
    FracPoly r;
    r[Rat(0)] = 1;
    for (int i = 0; i < k; ++i) r = fp_mul(r, base, cap);
    return r;
}

struct DSkel {
    std::vector<ExpVec> gens;
    std::vector<int> incident;
    bool coordinate_plane = false;
    bool internal_skeleton = false;
};

} // namespace

FracPoly poincare_cone(const std::vector<ExpVec>& simplex_verts, const Subdivision& S,
                       const WeightFunction& W, int cap) {
    if (cap <= 0) cap = S.n + 1;
    // A simplex inside whose cone the face lives provides the grading.
    for (const auto& s : S.simplices) {
        bool inside = true;
        for (const auto& v : simplex_verts)
            if (std::find(s.gens.begin(), s.gens.end(), v) == s.gens.end()) {
                inside = false;
                break;
            }
        if (inside) return cone_series(simplex_verts, W.covectors[s.id], cap);
    }
    throw internal_error("face vertices not contained in any subdivision simplex");
}

long poincare_volume_evaluation(const FracPoly& series, int k, int cap) {
    FracPoly num = fp_mul(series, one_minus_t_pow(k, Rat(cap)), Rat(cap));
    return fp_eval_at_one(num);
}

HodgeTable danilov_hodge_numbers(const FaceLattice& L, const Subdivision& S,
                                 const WeightFunction& W, int n) {
    if (!is_simplicial(L, n))
        throw precondition_error("Newton boundary is not simplicial");
    const int cap = n + 1;

    // Skeleton poset of the subdivision (all generator subsets).
    std::map<std::vector<ExpVec>, DSkel> skels;
    for (const auto& s : S.simplices) {
        const size_t m = s.gens.size();
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<ExpVec> key;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) key.push_back(s.gens[i]);
            std::sort(key.begin(), key.end());
            skels[key];
        }
    }
    for (auto& [key, sk] : skels) {
        sk.gens = key;
        for (const auto& s : S.simplices) {
            bool inside = true;
            for (const auto& g : key)
                if (std::find(s.gens.begin(), s.gens.end(), g) == s.gens.end()) {
                    inside = false;
                    break;
                }
            if (inside) sk.incident.push_back(s.id);
        }
        for (int c = 0; c < n && !sk.coordinate_plane; ++c) {
            bool all0 = true;
            for (const auto& g : key)
                if (g[c] != 0) { all0 = false; break; }
            if (all0) sk.coordinate_plane = true;
        }
        int mf = L.minimal_face_containing(key);
        if (mf < 0) throw internal_error("skeleton outside the face lattice");
        sk.internal_skeleton = L.faces[mf].dim + 1 > static_cast<int>(key.size());
    }

    // Box series per skeleton: Moebius over generator subsets of the closed
    // half-open cell series, each obtained from the graded cone series.
    auto box_series = [&](const DSkel& sk) -> FracPoly {
        const RatVec& cov = W.covectors[sk.incident.front()];
        FracPoly box;
        const size_t m = sk.gens.size();
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<ExpVec> sub;
            for (size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) sub.push_back(sk.gens[i]);
            FracPoly cell = fp_mul(cone_series(sub, cov, cap),
                                   one_minus_t_pow(static_cast<int>(sub.size()), Rat(cap)), Rat(cap));
            box = ((m - sub.size()) % 2 == 0) ? fp_add(box, cell) : fp_sub(box, cell);
        }
        return box;
    };

    HodgeTable table;
    auto add_slot = [&](const Rat& h, int w, long mult) {
        if (mult == 0) return;
        int p, q;
        Rat chi = frac_part(h);
        if (chi == 0) {
            p = n - static_cast<int>(to_long(rat_num(h)));
            q = w + 1 - p;
        } else {
            p = n - static_cast<int>(to_long(ceil_rat(h)));
            q = w - p;
        }
        if (p < 0 || p > n || q < 0 || q > n)
            throw internal_error("hodge index out of range in face-series assembly");
        table[HodgeKey{p, q, chi}] += mult;
    };

    // Interior vertices and their tower levels, counted combinatorially.
    for (int vid : L.vertices()) {
        const ExpVec v = L.faces[vid].vertices.front();
        bool positive = true;
        for (long c : v)
            if (c == 0) { positive = false; break; }
        if (!positive) continue;
        int kv = 0;
        for (const auto& s : S.simplices)
            if (std::find(s.gens.begin(), s.gens.end(), v) != s.gens.end()) ++kv;
        for (int j = 1; j <= kv - 1; ++j) add_slot(Rat(j), 2 * (n - j) - 1, 1);
    }

    for (const auto& [key, sk] : skels) {
        const int dhat = static_cast<int>(key.size());
        FracPoly box = box_series(sk);
        if (box.empty()) continue;
        if (!sk.coordinate_plane) {
            const int k = static_cast<int>(sk.incident.size());
            for (int j = 0; j <= k - 1; ++j) {
                int w = sk.internal_skeleton ? n - 1 : 2 * n - 1 - dhat - 2 * j;
                for (const auto& [h, m] : box) add_slot(h + j, w, m);
            }
        } else {
            // Shifted contributions of coordinate-plane skeleton points with
            // positive net multiplicity across the plane tilings.
            const auto pts_net = [&]() {
                std::vector<std::pair<Rat, int>> res; // (h, net) per point
                // Enumerate box points explicitly for per-point nets.
                const RatVec& cov = W.covectors[sk.incident.front()];
                const size_t dim = key[0].size();
                std::vector<long> hi(dim, 0);
                for (size_t c = 0; c < dim; ++c) {
                    long s = 0;
                    for (const auto& g : key) s += g[c];
                    hi[c] = s;
                }
                RatMat a(dim, RatVec(key.size()));
                for (size_t c = 0; c < key.size(); ++c)
                    for (size_t r = 0; r < dim; ++r) a[r][c] = Rat(key[c][r]);
                std::vector<ExpVec> pts;
                ExpVec p(dim, 0);
                std::function<void(size_t)> scan = [&](size_t axis) {
                    if (axis == dim) {
                        RatVec b;
                        for (long x : p) b.emplace_back(x);
                        auto sol = solve(a, b);
                        if (!sol) return;
                        for (const auto& bi : *sol)
                            if (bi <= 0 || bi >= 1) return;
                        pts.push_back(p);
                        return;
                    }
                    for (long x = 0; x <= hi[axis]; ++x) {
                        p[axis] = x;
                        scan(axis + 1);
                    }
                };
                scan(0);
                for (const auto& pt : pts) {
                    std::vector<int> supp, rest;
                    for (size_t c = 0; c < pt.size(); ++c)
                        (pt[c] != 0 ? supp : rest).push_back(static_cast<int>(c));
                    int net = 0;
                    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
                        std::vector<int> Sax = supp;
                        for (size_t i = 0; i < rest.size(); ++i)
                            if (mask & (1u << i)) Sax.push_back(rest[i]);
                        std::sort(Sax.begin(), Sax.end());
                        int mult = 0;
                        for (const auto& [key2, sk2] : skels) {
                            if (key2.size() != Sax.size()) continue;
                            bool in_plane = true;
                            for (const auto& g : key2) {
                                for (size_t c = 0; c < g.size() && in_plane; ++c)
                                    if (g[c] != 0 &&
                                        !std::binary_search(Sax.begin(), Sax.end(),
                                                            static_cast<int>(c)))
                                        in_plane = false;
                                if (!in_plane) break;
                            }
                            if (!in_plane) continue;
                            RatMat a2(pt.size(), RatVec(key2.size()));
                            for (size_t c = 0; c < key2.size(); ++c)
                                for (size_t r = 0; r < pt.size(); ++r)
                                    a2[r][c] = Rat(key2[c][r]);
                            RatVec b2;
                            for (long x : pt) b2.emplace_back(x);
                            auto sol = solve(std::move(a2), std::move(b2));
                            if (!sol) continue;
                            bool in_cell = true;
                            for (const auto& bi : *sol)
                                if (bi < 0 || bi >= 1) { in_cell = false; break; }
                            if (in_cell) ++mult;
                        }
                        net += ((n - static_cast<int>(Sax.size())) % 2 == 0) ? mult : -mult;
                    }
                    Rat h(0);
                    for (size_t c = 0; c < pt.size(); ++c) h += cov[c] * Rat(pt[c]);
                    res.emplace_back(h, net);
                }
                return res;
            }();
            for (const auto& [h, net] : pts_net) {
                if (net < 0) throw internal_error("negative net multiplicity in face series");
                for (int s = 1; s <= net; ++s) {
                    int w = sk.internal_skeleton ? n - 1 : 2 * n - 1 - dhat - 2 * s;
                    add_slot(h + s, w, 1);
                }
            }
        }
    }
    return table;
}

CrossCheckReport cross_check(const HodgeTable& a, const HodgeTable& b) {
    CrossCheckReport r;
    auto describe = [](const HodgeKey& k, long va, long vb) {
        return "h^{" + std::to_string(k.p) + "," + std::to_string(k.q) +
               "}_{chi=" + rat_str(k.chi) + "}: " + std::to_string(va) +
               " vs " + std::to_string(vb);
    };
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        long vb = it == b.end() ? 0 : it->second;
        if (v != vb) {
            r.equal = false;
            r.mismatches.push_back(describe(k, v, vb));
        }
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) {
            r.equal = false;
            r.mismatches.push_back(describe(k, 0, v));
        }
    return r;
}

} // namespace nwspec
