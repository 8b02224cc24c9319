#include "castelnuovo/counting.hpp"

namespace castelnuovo {

namespace {

void check_limit(const Box& box, const CountingLimits& limits) {
    Int cells = box.cell_count();
    if (cells > limits.box_limit) throw BoxLimitError(cells, limits.box_limit);
}

std::vector<FacetInequality> dilate_facets(const std::vector<FacetInequality>& facets,
                                           const Int& t) {
    std::vector<FacetInequality> out = facets;
    for (auto& f : out) f.offset *= t;
    return out;
}

// dilation counts L(1..T) reusing one facet system; L(0) = 1 by definition
std::vector<Int> dilation_counts(const std::vector<FacetInequality>& facets, const Box& base,
                                 int T, const CountingLimits& limits) {
    std::vector<Int> values(static_cast<std::size_t>(T) + 1);
    values[0] = 1;
    for (int t = 1; t <= T; ++t) {
        const Box box = base.dilated(t);
        check_limit(box, limits);
        const BoxCounts counts = count_box(dilate_facets(facets, t), box);
        values[t] = counts.interior + counts.boundary;
    }
    return values;
}

Int finite_difference_volume(const std::vector<Int>& values, int d) {
    Int nvol = 0;
    for (int k = 0; k <= d; ++k) {
        Int term = binomial(d, k) * values[k];
        nvol += ((d - k) % 2 == 0) ? term : Int(-term);
    }
    if (nvol < 1)
        throw ConsistencyError("normalized volume came out nonpositive: " + nvol.str());
    return nvol;
}

}  // namespace

std::vector<std::pair<LatticePoint, PointLocation>> enumerate_lattice_points(
    const LatticePolytope& p, const CountingLimits& limits) {
    const Box box = bounding_box(p.vertices);
    check_limit(box, limits);
    return collect_box_points(enumerate_facets(p), box);
}

LatticeProfile profile(const LatticePolytope& p, const CountingLimits& limits) {
    const std::vector<FacetInequality> facets = enumerate_facets(p);
    const Box box = bounding_box(p.vertices);
    check_limit(box, limits);

    const BoxCounts counts = count_box(facets, box);
    std::vector<Int> values = dilation_counts(facets, box, p.dim, limits);
    // reuse the t = 1 split instead of rescanning
    values[1] = counts.interior + counts.boundary;

    LatticeProfile prof;
    prof.dim = p.dim;
    prof.b = counts.boundary;
    prof.c = counts.interior;
    prof.total = prof.b + prof.c;
    prof.nvol = finite_difference_volume(values, p.dim);

    if (prof.c > 0) {
        const Int bound = p.dim * prof.c + (p.dim - 1) * prof.b - p.dim * p.dim + 2;
        if (prof.nvol < bound)
            throw ConsistencyError("minimal-volume inequality violated: nvol=" + prof.nvol.str() +
                                   " bound=" + bound.str() + " (counting bug)");
    }
    return prof;
}

EhrhartValues ehrhart_values(const LatticePolytope& p, int T, const CountingLimits& limits) {
    if (T < 1) throw ParameterError("ehrhart_values: T must be >= 1");
    const std::vector<FacetInequality> facets = enumerate_facets(p);
    const Box box = bounding_box(p.vertices);
    return EhrhartValues{dilation_counts(facets, box, T, limits)};
}

Int normalized_volume(const LatticePolytope& p, const CountingLimits& limits) {
    const std::vector<FacetInequality> facets = enumerate_facets(p);
    const Box box = bounding_box(p.vertices);
    return finite_difference_volume(dilation_counts(facets, box, p.dim, limits), p.dim);
}

Int interior_via_reciprocity(const LatticePolytope& p, const CountingLimits& limits) {
    const int d = p.dim;
    const std::vector<FacetInequality> facets = enumerate_facets(p);
    const Box box = bounding_box(p.vertices);
    const std::vector<Int> values = dilation_counts(facets, box, d, limits);

    // Lagrange interpolation through (t, L(t)) for t = 0..d, evaluated at -1
    Rational at_minus_one = 0;
    for (int k = 0; k <= d; ++k) {
        Rational term = values[k];
        for (int j = 0; j <= d; ++j) {
            if (j == k) continue;
            term *= Rational(-1 - j, k - j);
        }
        at_minus_one += term;
    }
    if (denominator(at_minus_one) != 1)
        throw ConsistencyError("reciprocity interpolation produced a non-integer value");
    Int c = numerator(at_minus_one);
    if (d % 2 != 0) c = -c;
    if (c < 0)
        throw ConsistencyError("reciprocity produced a negative interior count: " + c.str());
    return c;
}

}  // namespace castelnuovo
