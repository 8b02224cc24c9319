#include "castelnuovo/hull.hpp"

#include <omp.h>

#include <algorithm>
#include <optional>
#include <set>

namespace castelnuovo {

namespace {

// Integer normal of the hyperplane spanned by edge vectors (rows), as the
// signed (d-1)-minors of the edge matrix. Zero vector means rank < d-1.
std::vector<Int> hyperplane_normal(const std::vector<std::vector<Int>>& rows, int d) {
    std::vector<Int> normal(d);
    std::vector<std::vector<Int>> minor(d - 1, std::vector<Int>(d - 1));
    for (int j = 0; j < d; ++j) {
        for (int r = 0; r < d - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == j) continue;
                minor[r][cc++] = rows[r][c];
            }
        }
        Int det = determinant(minor);
        normal[j] = (j % 2 == 0) ? det : Int(-det);
    }
    return normal;
}

// Supporting inequality of the hyperplane through the d chosen points, or
// nullopt when the subset is degenerate or the hyperplane cuts the polytope.
std::optional<FacetInequality> supporting_facet(const LatticePolytope& p,
                                                const std::vector<int>& subset) {
    const int d = p.dim;
    std::vector<std::vector<Int>> rows(d - 1, std::vector<Int>(d));
    const LatticePoint& q0 = p.vertices[subset[0]];
    for (int r = 0; r < d - 1; ++r)
        for (int c = 0; c < d; ++c) rows[r][c] = p.vertices[subset[r + 1]][c] - q0[c];

    std::vector<Int> normal = hyperplane_normal(rows, d);
    Int g = 0;
    for (const Int& v : normal) g = gcd(g, v);
    if (g == 0) return std::nullopt;  // affine rank < d-1, spans no hyperplane
    for (Int& v : normal) v /= g;

    Int offset = 0;
    for (int c = 0; c < d; ++c) offset += normal[c] * q0[c];

    bool above = false, below = false;
    for (const auto& v : p.vertices) {
        Int s = 0;
        for (int c = 0; c < d; ++c) s += normal[c] * v[c];
        if (s > offset) above = true;
        if (s < offset) below = true;
        if (above && below) return std::nullopt;
    }
    if (above) {
        for (Int& v : normal) v = -v;
        offset = -offset;
    }
    return FacetInequality{std::move(normal), std::move(offset)};
}

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<FacetInequality> finalize(std::vector<FacetInequality> facets) {
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

}  // namespace

std::vector<FacetInequality> enumerate_facets_reference(const LatticePolytope& p) {
    const int d = p.dim;
    const int n = static_cast<int>(p.vertices.size());
    std::set<FacetInequality> out;

    std::vector<int> subset(d);
    for (int i = 0; i < d; ++i) subset[i] = i;
    do {
        if (auto f = supporting_facet(p, subset)) out.insert(std::move(*f));
    } while (next_combination(subset, n));

    return finalize({out.begin(), out.end()});
}

std::vector<FacetInequality> enumerate_facets(const LatticePolytope& p) {
    const int d = p.dim;
    const int n = static_cast<int>(p.vertices.size());

    std::vector<std::vector<FacetInequality>> partial(n - d + 1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int first = 0; first <= n - d; ++first) {
        std::vector<FacetInequality>& local = partial[first];
        std::vector<int> subset(d);
        subset[0] = first;
        std::vector<int> rest(d - 1);
        for (int i = 0; i < d - 1; ++i) rest[i] = first + 1 + i;
        do {
            std::copy(rest.begin(), rest.end(), subset.begin() + 1);
            if (auto f = supporting_facet(p, subset)) local.push_back(std::move(*f));
            // shift the remaining-index window so next_combination sees a
            // plain 0..n-first-2 range
            for (int& v : rest) v -= first + 1;
            bool more = next_combination(rest, n - first - 1);
            for (int& v : rest) v += first + 1;
            if (!more) break;
        } while (true);
    }

    std::vector<FacetInequality> all;
    for (auto& chunk : partial)
        for (auto& f : chunk) all.push_back(std::move(f));
    return finalize(std::move(all));
}

PointLocation classify_point(const std::vector<FacetInequality>& facets, const LatticePoint& x) {
    bool on = false;
    for (const auto& f : facets) {
        if (f.normal.size() != x.size())
            throw DimensionMismatchError("classify_point: point/facet dimension mismatch");
        Int s = 0;
        for (std::size_t c = 0; c < x.size(); ++c) s += f.normal[c] * x[c];
        if (s > f.offset) return PointLocation::Outside;
        if (s == f.offset) on = true;
    }
    return on ? PointLocation::Boundary : PointLocation::Interior;
}

}  // namespace castelnuovo
