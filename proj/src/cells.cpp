#include "nwspec/cells.hpp"

#include <functional>

namespace nwspec {

HalfOpenCell half_open_cell(const Simplex& s) {
    const size_t n = s.gens.size();
    const size_t dim = s.gens[0].size();
    HalfOpenCell cell;
    cell.simplex_id = s.id;
    cell.generators = s.gens;

    RatMat a(dim, RatVec(n));
    for (size_t c = 0; c < n; ++c)
        for (size_t r = 0; r < dim; ++r) a[r][c] = Rat(s.gens[c][r]);
    Rat d = det(a);
    if (d == 0) throw internal_error("singular generator matrix in half_open_cell");

    // Bounding box of the closed parallelepiped: coordinates between the
    // negative and positive parts of the generator sums.
    std::vector<long> lo(dim, 0), hi(dim, 0);
    for (size_t c = 0; c < dim; ++c)
        for (size_t g = 0; g < n; ++g) {
            if (s.gens[g][c] > 0) hi[c] += s.gens[g][c];
            else lo[c] += s.gens[g][c];
        }

    ExpVec p(dim, 0);
    std::function<void(size_t)> scan = [&](size_t axis) {
        if (axis == dim) {
            RatVec b;
            b.reserve(dim);
            for (long x : p) b.emplace_back(x);
            auto sol = solve(a, b);
            if (!sol) return;
            for (const auto& bi : *sol)
                if (bi < 0 || bi >= 1) return;
            cell.points.push_back(p);
            cell.coords.push_back(std::move(*sol));
            return;
        }
        for (long x = lo[axis]; x <= hi[axis]; ++x) {
            p[axis] = x;
            scan(axis + 1);
        }
    };
    scan(0);

    Int expected = abs(rat_num(d) / rat_den(d));
    if (Int(static_cast<long>(cell.points.size())) != expected)
        throw internal_error("cell point count does not match |det|");
    return cell;
}

ExpVec canonical_copy(const Simplex& s, const ExpVec& alpha) {
    ExpVec sum(alpha.size(), 0);
    for (const auto& g : s.gens) sum = expvec_add(sum, g);
    ExpVec c = expvec_sub(sum, alpha);
    for (long x : c)
        if (x < 0)
            throw internal_error("canonical copy has a negative coordinate at " + expvec_str(alpha));
    return c;
}

} // namespace nwspec
