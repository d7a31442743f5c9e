// Brute-force verification: Milnor number via truncated Jacobian-ideal row
// reduction, per-face finite-dimensionality, and lattice-count checks.
#pragma once

#include "nwspec/newton.hpp"
#include "nwspec/subdivision.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace nwspec {

struct OracleResult {
    bool stabilized = false;
    long mu = -1;
    std::vector<ExpVec> std_monomials; // complementary monomials when stabilized
    int cap_reached = 0;
};

// Optional grading refining the elimination order. Pivoting on the highest
// level makes the surviving standard monomials level-minimal; the dimension
// itself never depends on the order.
using LevelFn = std::function<Rat(const ExpVec&)>;

// Quotient dimension of C[[x]]/(J + m^(D+1)) for growing caps D, until the
// dimension and the standard-monomial set repeat across two consecutive caps.
// cap/ceiling <= 0 pick defaults (max support degree + 2, and +18 resp.,
// unless NWSPEC_ORACLE_CEILING is set).
OracleResult milnor_oracle(const Germ& g, int start_cap = 0, int ceiling = 0,
                           const LevelFn& level = {});

enum class FaceVerdict { Finite, NotFinite, Unknown };

struct NondegeneracyReport {
    std::vector<std::pair<int, FaceVerdict>> per_face; // face id -> verdict
    FaceVerdict overall = FaceVerdict::Unknown;
    bool nondegenerate() const { return overall == FaceVerdict::Finite; }
};

// Finite dimensionality of each face ring A_tau by the same truncated
// linear algebra over the cone monomials.
NondegeneracyReport nondegeneracy_check(const Germ& g, const FaceLattice& L,
                                        int ceiling = 0);

// Lattice points of the half-open parallelepiped, counted by an independent
// bounding-box scan.
long volume_count_oracle(const Simplex& s);

} // namespace nwspec
