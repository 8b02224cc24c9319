#pragma once

#include <utility>
#include <vector>

#include "castelnuovo/count_kernels.hpp"

namespace castelnuovo {

struct CountingLimits {
    // Scans fail with BoxLimitError instead of running past this many cells.
    Int box_limit{100000000};
};

/// Measured lattice data of one polytope: boundary count b, interior count
/// c, total points of P, and the normalized volume d!*vol(P).
struct LatticeProfile {
    Int b;
    Int c;
    Int total;
    Int nvol;
    int dim = 0;
};

/// Dilation counts values[t] = |tP n Z^d| for t = 0..T; values[0] = 1.
struct EhrhartValues {
    std::vector<Int> values;
};

std::vector<std::pair<LatticePoint, PointLocation>> enumerate_lattice_points(
    const LatticePolytope& p, const CountingLimits& limits = {});

/// b, c by direct classification, nvol by the d-th finite difference of the
/// dilation counts. When c > 0 the minimal-volume inequality
/// nvol >= d*c + (d-1)*b - d^2 + 2 is asserted; a violation throws
/// ConsistencyError since it would mean a counting bug.
LatticeProfile profile(const LatticePolytope& p, const CountingLimits& limits = {});

EhrhartValues ehrhart_values(const LatticePolytope& p, int T, const CountingLimits& limits = {});

/// d!*vol(P), computed as the d-th forward difference of the dilation counts.
Int normalized_volume(const LatticePolytope& p, const CountingLimits& limits = {});

/// Interior count recovered by interpolating the dilation polynomial through
/// L(0..d) and evaluating at -1; equals profile(p).c for every lattice
/// polytope. Exact rationals throughout; a fractional result throws.
Int interior_via_reciprocity(const LatticePolytope& p, const CountingLimits& limits = {});

}  // namespace castelnuovo
