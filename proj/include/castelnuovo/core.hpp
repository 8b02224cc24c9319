#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "castelnuovo/arith.hpp"

namespace castelnuovo {

using LatticePoint = std::vector<Int>;

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DuplicateVertexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotFullDimensionalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateSimplexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// parameter outside a constructor's stated range
struct ParameterError : std::domain_error {
    using std::domain_error::domain_error;
};
// the minimal-volume bound / Castelnuovo predicate is undefined when c(P) = 0
struct UndefinedPredicateError : std::domain_error {
    using std::domain_error::domain_error;
};
// triplet outside the range the constructor families cover (not a claim of impossibility)
struct NotRealizableError : std::domain_error {
    using std::domain_error::domain_error;
};
// an exact identity that must hold failed; this indicates an implementation bug
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct BoxLimitError : std::runtime_error {
    Int cells;
    Int limit;
    BoxLimitError(Int cells_, Int limit_)
        : std::runtime_error("bounding-box cell count " + cells_.str() +
                             " exceeds the configured limit " + limit_.str()),
          cells(std::move(cells_)),
          limit(std::move(limit_)) {}
};

/// A full-dimensional polytope given by integer vertex coordinates.
/// Construct through validate_polytope; dim always equals the affine rank
/// of the point set and every point has dim coordinates.
struct LatticePolytope {
    int dim = 0;
    std::vector<LatticePoint> vertices;
};

/// Rank of {p_i - p_0} over the rationals, computed by fraction-free
/// integer elimination.
int affine_rank(const std::vector<LatticePoint>& points);

/// Checks coordinate lengths, rejects duplicate points, and requires the
/// point set to span dimension dim. Non-vertex points are allowed; they are
/// simply absorbed by the hull downstream.
LatticePolytope validate_polytope(int dim, std::vector<LatticePoint> points);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Int determinant(std::vector<std::vector<Int>> m);

/// Rank of an arbitrary integer matrix (fraction-free elimination).
int matrix_rank(std::vector<std::vector<Int>> m);

}  // namespace castelnuovo
