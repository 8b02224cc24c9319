#pragma once

#include <vector>

#include "castelnuovo/counting.hpp"

namespace castelnuovo {

/// Explicit simplex decomposition of a polytope. Correctness certificate:
/// every simplex vertex lies in the ambient polytope and the simplex volumes
/// sum to the ambient normalized volume, which rules out overlaps and gaps
/// at once.
struct SimplexDecomposition {
    struct Simplex {
        std::vector<LatticePoint> vertices;  // d+1 points
        Int nvol;
    };
    LatticePolytope ambient;
    std::vector<Simplex> simplices;
};

/// Normalized volume |det(v_1-v_0, ..., v_d-v_0)| of a d-simplex given by
/// its d+1 vertices.
Int simplex_nvol(const std::vector<LatticePoint>& vertices);

/// The d-simplex fan of the bipyramid family: the base simplex through the
/// far apex plus one simplex per dropped unit vertex, volumes
/// cd+1 and cd-n each.
SimplexDecomposition bipyramid_triangulation(const Int& c, int d, const Int& n);

/// Vertex subsets (origin excluded) whose cones over 0 triangulate the
/// c = 0 prism-type polytope into unimodular simplices. Each subset has d
/// points drawn from e_1..e_{d-1}, w, e_d, e_1+e_d, ..., e_j+e_d.
std::vector<std::vector<LatticePoint>> prism_zero_simplex_sets(int d, int j);

/// Unimodular triangulation of prism_type(0, d, j) built from
/// prism_zero_simplex_sets; throws ConsistencyError if any cone fails to be
/// unimodular.
SimplexDecomposition prism_zero_triangulation(int d, int j);

/// True iff every simplex vertex classifies inside-or-on the ambient hull,
/// every stored volume matches its recomputed determinant, and the volumes
/// sum to the ambient normalized volume.
bool verify_decomposition(const SimplexDecomposition& dec, const CountingLimits& limits = {});

}  // namespace castelnuovo
