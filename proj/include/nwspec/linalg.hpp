// Small dense exact linear algebra over the rationals.
#pragma once

#include "nwspec/germ.hpp"
#include "nwspec/rational.hpp"

#include <optional>
#include <vector>

namespace nwspec {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major

inline Rat det(RatMat a) {
    const size_t n = a.size();
    Rat d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

// Solves A x = b; nullopt when A is singular or the system is inconsistent.
// A may be rectangular (rows >= cols requires consistency; rows < cols is
// rejected unless the solution is unique on the column space).
inline std::optional<RatVec> solve(RatMat a, RatVec b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rat inv = a[r][c];
        for (size_t cc = c; cc < cols; ++cc) a[r][cc] /= inv;
        b[r] /= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            Rat f = a[rr][c];
            for (size_t cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
            b[rr] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (b[rr] != 0) return std::nullopt; // inconsistent
    if (pivot_col.size() != cols) return std::nullopt; // underdetermined
    RatVec x(cols);
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

inline size_t rank(RatMat a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t rr = r + 1; rr < rows; ++rr) {
            if (a[rr][c] == 0) continue;
            Rat f = a[rr][c] / a[r][c];
            for (size_t cc = c; cc < cols; ++cc) a[rr][cc] -= f * a[r][cc];
        }
        ++r;
    }
    return r;
}

inline RatMat rows_from_points(const std::vector<ExpVec>& pts) {
    RatMat m;
    m.reserve(pts.size());
    for (const auto& p : pts) {
        RatVec row;
        row.reserve(p.size());
        for (long c : p) row.emplace_back(c);
        m.push_back(std::move(row));
    }
    return m;
}

// Affine dimension of a point set (-1 for empty).
inline int affine_dim(const std::vector<ExpVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec row;
        for (size_t c = 0; c < pts[0].size(); ++c) row.emplace_back(pts[i][c] - pts[0][c]);
        diffs.push_back(std::move(row));
    }
    return diffs.empty() ? 0 : static_cast<int>(rank(diffs));
}

// Barycentric solve: p = sum l_i v_i with sum l_i = 1. Unique only when the
// v_i are affinely independent.
inline std::optional<RatVec> barycentric(const std::vector<ExpVec>& verts, const RatVec& p) {
    const size_t n = p.size();
    RatMat a(n + 1, RatVec(verts.size()));
    RatVec b(n + 1);
    for (size_t c = 0; c < verts.size(); ++c)
        for (size_t r = 0; r < n; ++r) a[r][c] = Rat(verts[c][r]);
    for (size_t c = 0; c < verts.size(); ++c) a[n][c] = 1;
    for (size_t r = 0; r < n; ++r) b[r] = p[r];
    b[n] = 1;
    return solve(std::move(a), std::move(b));
}

// Exact convex-hull membership via Caratheodory: p in conv(verts) iff some
// affinely independent subset of size <= dim+1 contains it.
bool in_convex_hull(const std::vector<ExpVec>& verts, const ExpVec& p);

// Same but for relative interior membership of a simplex (all weights > 0).
inline bool in_simplex_relint(const std::vector<ExpVec>& simplex_verts, const RatVec& p) {
    auto l = barycentric(simplex_verts, p);
    if (!l) return false;
    for (const auto& w : *l)
        if (w <= 0) return false;
    return true;
}

} // namespace nwspec
