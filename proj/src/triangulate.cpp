#include "castelnuovo/triangulate.hpp"

#include <algorithm>

#include "castelnuovo/families.hpp"

namespace castelnuovo {

namespace {

LatticePoint unit(int i, int d) {  // e_i, 1-based
    LatticePoint p(d, Int(0));
    p[i - 1] = 1;
    return p;
}

}  // namespace

Int simplex_nvol(const std::vector<LatticePoint>& vertices) {
    if (vertices.empty()) throw DegenerateSimplexError("simplex_nvol: no vertices");
    const int d = static_cast<int>(vertices[0].size());
    if (static_cast<int>(vertices.size()) != d + 1)
        throw DegenerateSimplexError("simplex_nvol: a d-simplex needs d+1 vertices");
    std::vector<std::vector<Int>> edges(d, std::vector<Int>(d));
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(vertices[r + 1].size()) != d)
            throw DimensionMismatchError("simplex_nvol: ragged vertex list");
        for (int c = 0; c < d; ++c) edges[r][c] = vertices[r + 1][c] - vertices[0][c];
    }
    Int det = determinant(std::move(edges));
    if (det == 0) throw DegenerateSimplexError("simplex_nvol: vertices are affinely dependent");
    return abs(det);
}

SimplexDecomposition bipyramid_triangulation(const Int& c, int d, const Int& n) {
    auto [ambient, pred] = bipyramid(c, d, n);
    (void)pred;

    const LatticePoint origin(d, Int(0));
    LatticePoint near_apex(d, n);
    near_apex[d - 1] = n + 1;
    LatticePoint far_apex(d, c * d);
    far_apex[d - 1] = c * d + 1;

    SimplexDecomposition dec;
    dec.ambient = std::move(ambient);

    std::vector<LatticePoint> base{origin};
    for (int i = 1; i < d; ++i) base.push_back(unit(i, d));
    base.push_back(far_apex);
    dec.simplices.push_back({base, simplex_nvol(base)});

    for (int drop = 1; drop < d; ++drop) {
        std::vector<LatticePoint> cell{origin};
        for (int i = 1; i < d; ++i)
            if (i != drop) cell.push_back(unit(i, d));
        cell.push_back(near_apex);
        cell.push_back(far_apex);
        dec.simplices.push_back({cell, simplex_nvol(cell)});
    }
    return dec;
}

std::vector<std::vector<LatticePoint>> prism_zero_simplex_sets(int d, int j) {
    if (d < 3) throw ParameterError("prism_zero_simplex_sets: requires d >= 3");
    if (j < 0 || j > d - 1)
        throw ParameterError("prism_zero_simplex_sets: requires 0 <= j <= d-1");

    // item ids: 0..d-2 are e_1..e_{d-1}; d-1 is w; d+s is e'_s (e_d shifted
    // copies: e'_0 = e_d, e'_s = e_s + e_d)
    const int w_id = d - 1;
    const int nitems = d + j + 1;
    auto point_of = [&](int id) -> LatticePoint {
        if (id < w_id) return unit(id + 1, d);
        if (id == w_id) {
            LatticePoint p(d, Int(-1));
            p[d - 1] = 0;
            return p;
        }
        const int s = id - d;
        LatticePoint p = unit(d, d);
        if (s > 0) p[s - 1] += 1;
        return p;
    };

    std::vector<bool> in(nitems);
    auto has = [&](int id) { return in[id]; };

    auto excluded = [&]() {
        // no pair {e'_s, e_t} with 0 <= s < t <= j
        for (int s = 0; s <= j; ++s)
            for (int t = s + 1; t <= j; ++t)
                if (has(d + s) && has(t - 1)) return true;
        // not the bottom facet set {e_1..e_{d-1}, w}
        bool bottom = has(w_id);
        for (int i = 0; i < w_id && bottom; ++i) bottom = has(i);
        if (bottom) return true;
        // not {e_1..e_{xi-1}, e'_xi..e'_j, e_{j+1}..e_{d-1}, w} for 1 <= xi <= j;
        // each pattern has exactly d items, so containment is equality
        for (int xi = 1; xi <= j; ++xi) {
            bool match = has(w_id);
            for (int t = 1; t < xi && match; ++t) match = has(t - 1);
            for (int s = xi; s <= j && match; ++s) match = has(d + s);
            for (int t = j + 1; t < d && match; ++t) match = has(t - 1);
            if (match) return true;
        }
        return false;
    };

    std::vector<std::vector<LatticePoint>> out;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::fill(in.begin(), in.end(), false);
        for (int id : idx) in[id] = true;
        if (!excluded()) {
            std::vector<LatticePoint> W;
            W.reserve(d);
            for (int id : idx) W.push_back(point_of(id));
            out.push_back(std::move(W));
        }
        int i = d - 1;
        while (i >= 0 && idx[i] == nitems - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < d; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

SimplexDecomposition prism_zero_triangulation(int d, int j) {
    SimplexDecomposition dec;
    dec.ambient = prism_type(0, d, j).first;
    for (auto& W : prism_zero_simplex_sets(d, j)) {
        std::vector<LatticePoint> cell;
        cell.reserve(d + 1);
        cell.push_back(LatticePoint(d, Int(0)));
        for (auto& p : W) cell.push_back(std::move(p));
        Int v = simplex_nvol(cell);
        if (v != 1)
            throw ConsistencyError("prism_zero_triangulation: cone is not unimodular (nvol=" +
                                   v.str() + ")");
        dec.simplices.push_back({std::move(cell), std::move(v)});
    }
    return dec;
}

bool verify_decomposition(const SimplexDecomposition& dec, const CountingLimits& limits) {
    const auto facets = enumerate_facets(dec.ambient);
    Int total = 0;
    for (const auto& cell : dec.simplices) {
        for (const auto& v : cell.vertices)
            if (classify_point(facets, v) == PointLocation::Outside) return false;
        if (simplex_nvol(cell.vertices) != cell.nvol) return false;
        total += cell.nvol;
    }
    return total == normalized_volume(dec.ambient, limits);
}

}  // namespace castelnuovo
