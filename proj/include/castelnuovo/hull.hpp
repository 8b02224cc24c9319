#pragma once

#include <vector>

#include "castelnuovo/core.hpp"

namespace castelnuovo {

/// Primitive inward inequality normal.x <= offset; every polytope point
/// satisfies it and at least d affinely independent points meet it exactly.
struct FacetInequality {
    std::vector<Int> normal;
    Int offset;

    friend bool operator==(const FacetInequality& a, const FacetInequality& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const FacetInequality& a, const FacetInequality& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

enum class PointLocation { Interior, Boundary, Outside };

/// Complete facet system of conv(p.vertices), sorted by (normal, offset).
/// Brute force over d-subsets, parallelized over the leading subset index.
std::vector<FacetInequality> enumerate_facets(const LatticePolytope& p);

/// Single-loop transcription of the same d-subset scan; the correctness
/// baseline the parallel version is tested against.
std::vector<FacetInequality> enumerate_facets_reference(const LatticePolytope& p);

PointLocation classify_point(const std::vector<FacetInequality>& facets, const LatticePoint& x);

}  // namespace castelnuovo
