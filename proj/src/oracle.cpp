#include "nwspec/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace nwspec {

namespace {

using SparseRow = std::map<int, Rat>; // column -> coefficient

// Eliminates rows against pivots keyed by their highest column (local order:
// leading term = largest monomial). Returns the surviving pivot columns.
struct Eliminator {
    std::map<int, SparseRow> pivots; // pivot column -> normalized row

    void add(SparseRow row) {
        while (!row.empty()) {
            int lead = row.rbegin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rat inv = row.rbegin()->second;
                for (auto& [c, v] : row) v /= inv;
                pivots.emplace(lead, std::move(row));
                return;
            }
            Rat factor = row.rbegin()->second;
            const SparseRow& p = it->second;
            for (const auto& [c, v] : p) {
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -factor * v);
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
    }
};

std::vector<ExpVec> monomials_up_to(int n, int deg,
                                    const std::function<bool(const ExpVec&)>& keep,
                                    const LevelFn& level = {}) {
    std::vector<ExpVec> out;
    ExpVec e(n, 0);
    std::function<void(int, int)> rec = [&](int axis, int left) {
        if (axis == n) {
            if (keep(e)) out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[axis] = k;
            rec(axis + 1, left - k);
        }
        e[axis] = 0;
    };
    rec(0, deg);
    // Pivot order: optional level first, then (degree, lex).
    if (level) {
        std::vector<std::pair<Rat, ExpVec>> keyed;
        keyed.reserve(out.size());
        for (auto& m : out) keyed.emplace_back(level(m), std::move(m));
        std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            long da = expvec_deg(a.second), db = expvec_deg(b.second);
            if (da != db) return da < db;
            return a.second < b.second;
        });
        out.clear();
        for (auto& [lv, m] : keyed) out.push_back(std::move(m));
    } else {
        std::stable_sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) {
            long da = expvec_deg(a), db = expvec_deg(b);
            if (da != db) return da < db;
            return a < b;
        });
    }
    return out;
}

struct QuotientResult {
    long dim = 0;
    std::set<ExpVec> std_monomials;
};

// dim of span(monomials)/span(m * gens, truncated above the cap).
QuotientResult truncated_quotient(int n, const std::vector<std::map<ExpVec, Rat>>& gens,
                                  const std::vector<ExpVec>& monomials, int cap) {
    std::map<ExpVec, int> col;
    for (size_t i = 0; i < monomials.size(); ++i) col[monomials[i]] = static_cast<int>(i);

    Eliminator elim;
    for (const auto& gen : gens) {
        if (gen.empty()) continue;
        long mindeg = cap;
        for (const auto& [e, c] : gen) mindeg = std::min(mindeg, expvec_deg(e));
        for (const auto& m : monomials) {
            if (expvec_deg(m) + mindeg > cap) continue;
            SparseRow row;
            bool any = false;
            for (const auto& [e, c] : gen) {
                ExpVec prod = expvec_add(m, e);
                auto it = col.find(prod);
                if (it == col.end()) continue; // truncated above the cap or off-cone
                row[it->second] += c;
                any = true;
            }
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
            if (any && !row.empty()) elim.add(std::move(row));
        }
    }

    QuotientResult qr;
    for (size_t i = 0; i < monomials.size(); ++i)
        if (!elim.pivots.count(static_cast<int>(i))) {
            qr.std_monomials.insert(monomials[i]);
            ++qr.dim;
        }
    return qr;
}

int default_ceiling(int start) {
    if (const char* env = std::getenv("NWSPEC_ORACLE_CEILING"))
        return std::atoi(env);
    return start + 18;
}

std::vector<std::map<ExpVec, Rat>> jacobian(const Germ& g) {
    std::vector<std::map<ExpVec, Rat>> J(g.n);
    for (const auto& [e, c] : g.terms)
        for (int i = 0; i < g.n; ++i) {
            if (e[i] == 0) continue;
            ExpVec d = e;
            d[i] -= 1;
            J[i][d] += c * e[i];
        }
    return J;
}

} // namespace

OracleResult milnor_oracle(const Germ& g, int start_cap, int ceiling, const LevelFn& level) {
    long maxdeg = 0;
    for (const auto& [e, c] : g.terms) maxdeg = std::max(maxdeg, expvec_deg(e));
    int cap = start_cap > 0 ? start_cap : static_cast<int>(maxdeg) + 2;
    int top = ceiling > 0 ? ceiling : default_ceiling(cap);

    auto J = jacobian(g);
    OracleResult res;
    std::optional<QuotientResult> prev;
    for (int D = cap; D <= top; ++D) {
        auto monos = monomials_up_to(g.n, D, [](const ExpVec&) { return true; }, level);
        auto qr = truncated_quotient(g.n, J, monos, D);
        res.cap_reached = D;
        if (prev && prev->dim == qr.dim && prev->std_monomials == qr.std_monomials) {
            res.stabilized = true;
            res.mu = qr.dim;
            res.std_monomials.assign(qr.std_monomials.begin(), qr.std_monomials.end());
            return res;
        }
        prev = std::move(qr);
    }
    res.mu = prev ? prev->dim : -1; // best upper bound; not certified
    return res;
}

NondegeneracyReport nondegeneracy_check(const Germ& g, const FaceLattice& L, int ceiling) {
    NondegeneracyReport rep;
    bool any_unknown = false;
    for (const auto& face : L.faces) {
        // Face polynomial and the toric generators x_i d/dx_i f^tau; their
        // supports stay inside the face.
        std::vector<std::map<ExpVec, Rat>> gens(g.n);
        for (const auto& [e, c] : g.terms) {
            if (!in_convex_hull(face.vertices, e)) continue;
            for (int i = 0; i < g.n; ++i)
                if (e[i] != 0) gens[i][e] += c * e[i];
        }

        long maxdeg = 0;
        for (const auto& v : face.vertices) maxdeg = std::max(maxdeg, expvec_deg(v));
        int cap = static_cast<int>(maxdeg) + 2;
        int top = ceiling > 0 ? ceiling : default_ceiling(cap);

        // Cone membership for S_tau-hat monomials.
        auto in_cone = [&](const ExpVec& e) {
            if (expvec_deg(e) == 0) return true;
            RatMat a(g.n, RatVec(face.vertices.size()));
            for (size_t c2 = 0; c2 < face.vertices.size(); ++c2)
                for (int r = 0; r < g.n; ++r) a[r][c2] = Rat(face.vertices[c2][r]);
            // Feasibility of nonnegative combinations via Caratheodory over
            // linearly independent vertex subsets.
            std::vector<size_t> comb;
            std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t need) -> bool {
                if (need == 0) {
                    std::vector<ExpVec> sub;
                    for (size_t i : comb) sub.push_back(face.vertices[i]);
                    RatMat m(g.n, RatVec(sub.size()));
                    for (size_t c2 = 0; c2 < sub.size(); ++c2)
                        for (int r = 0; r < g.n; ++r) m[r][c2] = Rat(sub[c2][r]);
                    RatVec b;
                    for (long x : e) b.emplace_back(x);
                    auto sol = solve(m, b);
                    if (!sol) return false;
                    for (const auto& l : *sol)
                        if (l < 0) return false;
                    return true;
                }
                for (size_t i = start; i < face.vertices.size(); ++i) {
                    comb.push_back(i);
                    if (rec(i + 1, need - 1)) return true;
                    comb.pop_back();
                }
                return false;
            };
            size_t maxk = std::min(face.vertices.size(), static_cast<size_t>(g.n));
            for (size_t k = 1; k <= maxk; ++k) {
                comb.clear();
                if (rec(0, k)) return true;
            }
            return false;
        };

        FaceVerdict verdict = FaceVerdict::Unknown;
        std::optional<QuotientResult> prev;
        bool strictly_growing = true;
        for (int D = cap; D <= top; ++D) {
            auto monos = monomials_up_to(g.n, D, in_cone);
            auto qr = truncated_quotient(g.n, gens, monos, D);
            if (prev) {
                if (prev->dim == qr.dim && prev->std_monomials == qr.std_monomials) {
                    verdict = FaceVerdict::Finite;
                    break;
                }
                if (qr.dim <= prev->dim) strictly_growing = false;
            }
            prev = std::move(qr);
        }
        if (verdict == FaceVerdict::Unknown && strictly_growing)
            verdict = FaceVerdict::NotFinite;
        rep.per_face.emplace_back(face.id, verdict);
        if (verdict == FaceVerdict::Unknown) any_unknown = true;
    }
    bool any_bad = false;
    for (const auto& [id, v] : rep.per_face)
        if (v == FaceVerdict::NotFinite) any_bad = true;
    rep.overall = any_bad      ? FaceVerdict::NotFinite
                  : any_unknown ? FaceVerdict::Unknown
                                : FaceVerdict::Finite;
    return rep;
}

long volume_count_oracle(const Simplex& s) {
    const size_t dim = s.gens[0].size();
    const size_t n = s.gens.size();
    std::vector<long> lo(dim, 0), hi(dim, 0);
    for (size_t c = 0; c < dim; ++c)
        for (size_t g = 0; g < n; ++g) {
            if (s.gens[g][c] > 0) hi[c] += s.gens[g][c];
            else lo[c] += s.gens[g][c];
        }
    long count = 0;
    ExpVec p(dim, 0);
    std::function<void(size_t)> scan = [&](size_t axis) {
        if (axis == dim) {
            RatMat a(dim, RatVec(n));
            for (size_t c = 0; c < n; ++c)
                for (size_t r = 0; r < dim; ++r) a[r][c] = Rat(s.gens[c][r]);
            RatVec b;
            for (long x : p) b.emplace_back(x);
            auto sol = solve(std::move(a), std::move(b));
            if (!sol) return;
            for (const auto& bi : *sol)
                if (bi < 0 || bi >= 1) return;
            ++count;
            return;
        }
        for (long x = lo[axis]; x <= hi[axis]; ++x) {
            p[axis] = x;
            scan(axis + 1);
        }
    };
    scan(0);
    return count;
}

} // namespace nwspec
