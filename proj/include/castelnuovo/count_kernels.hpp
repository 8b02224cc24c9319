#pragma once

#include <utility>
#include <vector>

#include "castelnuovo/hull.hpp"

namespace castelnuovo {

/// Axis-aligned integer box, both ends inclusive.
struct Box {
    std::vector<Int> lo;
    std::vector<Int> hi;

    Int cell_count() const;
    Box dilated(const Int& t) const;
};

Box bounding_box(const std::vector<LatticePoint>& points);

struct BoxCounts {
    Int interior{0};
    Int boundary{0};
};

/// Reference kernel: walks every cell of the box and classifies it against
/// the facet system, one exact dot product per facet. Kept as the testing
/// baseline for count_box; do not use on large boxes.
BoxCounts count_box_reference(const std::vector<FacetInequality>& facets, const Box& box);

/// Production kernel. Enumerates columns along the widest axis, solves each
/// facet inequality for the column coordinate (one floor division per facet)
/// and adds up the closed/open interval lengths. Columns are chunked across
/// OpenMP threads; counts are order-independent so the result is
/// deterministic for any thread count. Falls back from int64 to
/// arbitrary-precision arithmetic unless a precomputed bound proves every
/// intermediate value fits in 62 bits.
BoxCounts count_box(const std::vector<FacetInequality>& facets, const Box& box);

/// Materializing variant of count_box: every lattice point of the box that
/// is not outside, with its location, in lexicographic coordinate order.
std::vector<std::pair<LatticePoint, PointLocation>> collect_box_points(
    const std::vector<FacetInequality>& facets, const Box& box);

}  // namespace castelnuovo
