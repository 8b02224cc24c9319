#pragma once

#include <utility>

#include "castelnuovo/core.hpp"

namespace castelnuovo {

/// Closed-form profile a family constructor predicts for its polytope.
/// Constructors never assert these; tests compare them against measurement.
struct FamilyPrediction {
    Int b_pred;
    Int c_pred;
    Int nvol_pred;
};

/// Bipyramid-type polytope on d+2 vertices: 0, e_1..e_{d-1},
/// e_d + n*1, e_d + cd*1 (1 = all-ones vector).
/// Predicts (cd - n + d + 1, c, (d-1)(cd-n) + cd + 1).
/// Requires c >= 1, d >= 3, 0 <= n < cd.
std::pair<LatticePolytope, FamilyPrediction> bipyramid(const Int& c, int d, const Int& n);

/// Prism over the (d-1)-simplex conv{e_1..e_{d-1}, -e_1-..-e_{d-1}} with
/// height c+1. Predicts (cd + 2d + 2, c, (c+1)d^2). Requires c >= 0, d >= 3.
std::pair<LatticePolytope, FamilyPrediction> prism(const Int& c, int d);

/// Prism-type interpolant between the shifted prism and prism(c): the top
/// copy keeps height c+1 on vertices e_1..e_j and drops to height c on the
/// rest. Predicts (cd + d + 2 + j, c, cd^2 + jd + d - j).
/// Requires c >= 0, d >= 3, 0 <= j <= d-1.
std::pair<LatticePolytope, FamilyPrediction> prism_type(const Int& c, int d, int j);

/// Simplex 0, e_1..e_{d-1}, e_d + cd*1 realizing the minimal boundary count
/// b = d+1. Predicts (d + 1, c, cd + 1). Requires c >= 1, d >= 3.
std::pair<LatticePolytope, FamilyPrediction> ht_simplex(const Int& c, int d);

/// Cube [-1,1]^d given by its 2^d sign vertices. Requires d >= 3.
LatticePolytope cube(int d);

/// Fixed triangular prism in R^3 with profile (29, 1, 54).
LatticePolytope example_prism_r3();

}  // namespace castelnuovo
