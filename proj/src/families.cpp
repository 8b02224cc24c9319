#include "castelnuovo/families.hpp"

#include <algorithm>

namespace castelnuovo {

namespace {

LatticePoint unit(int i, int d) {  // e_i, 1-based
    LatticePoint p(d, Int(0));
    p[i - 1] = 1;
    return p;
}

LatticePoint diagonal(const Int& k, int d) {  // k * (1,...,1)
    return LatticePoint(d, k);
}

LatticePoint w_vertex(int d) {  // -e_1 - ... - e_{d-1}
    LatticePoint p(d, Int(-1));
    p[d - 1] = 0;
    return p;
}

LatticePoint lifted(LatticePoint p, const Int& h) {
    p.back() += h;
    return p;
}

}  // namespace

std::pair<LatticePolytope, FamilyPrediction> bipyramid(const Int& c, int d, const Int& n) {
    if (c < 1) throw ParameterError("bipyramid: requires c >= 1");
    if (d < 3) throw ParameterError("bipyramid: requires d >= 3");
    if (n < 0 || n >= c * d) throw ParameterError("bipyramid: requires 0 <= n < c*d");

    std::vector<LatticePoint> pts;
    pts.push_back(LatticePoint(d, Int(0)));
    for (int i = 1; i < d; ++i) pts.push_back(unit(i, d));
    pts.push_back(lifted(diagonal(n, d), 1));
    pts.push_back(lifted(diagonal(c * d, d), 1));

    const Int span = c * d - n;
    FamilyPrediction pred{span + d + 1, c, (d - 1) * span + c * d + 1};
    return {validate_polytope(d, std::move(pts)), std::move(pred)};
}

std::pair<LatticePolytope, FamilyPrediction> prism(const Int& c, int d) {
    if (c < 0) throw ParameterError("prism: requires c >= 0");
    if (d < 3) throw ParameterError("prism: requires d >= 3");

    std::vector<LatticePoint> base;
    for (int i = 1; i < d; ++i) base.push_back(unit(i, d));
    base.push_back(w_vertex(d));

    std::vector<LatticePoint> pts = base;
    for (const auto& p : base) pts.push_back(lifted(p, c + 1));

    FamilyPrediction pred{c * d + 2 * d + 2, c, (c + 1) * d * d};
    return {validate_polytope(d, std::move(pts)), std::move(pred)};
}

std::pair<LatticePolytope, FamilyPrediction> prism_type(const Int& c, int d, int j) {
    if (c < 0) throw ParameterError("prism_type: requires c >= 0");
    if (d < 3) throw ParameterError("prism_type: requires d >= 3");
    if (j < 0 || j > d - 1) throw ParameterError("prism_type: requires 0 <= j <= d-1");

    std::vector<LatticePoint> pts;
    for (int i = 1; i < d; ++i) pts.push_back(unit(i, d));
    pts.push_back(w_vertex(d));
    pts.push_back(lifted(LatticePoint(d, Int(0)), c + 1));
    for (int i = 1; i <= j; ++i) pts.push_back(lifted(unit(i, d), c + 1));
    for (int i = j + 1; i < d; ++i) pts.push_back(lifted(unit(i, d), c));
    pts.push_back(lifted(w_vertex(d), c));

    // at c = 0 the bottom and lifted-by-c copies coincide
    std::vector<LatticePoint> unique_pts;
    for (auto& p : pts)
        if (std::find(unique_pts.begin(), unique_pts.end(), p) == unique_pts.end())
            unique_pts.push_back(std::move(p));

    FamilyPrediction pred{c * d + d + 2 + j, c, c * d * d + j * d + d - j};
    return {validate_polytope(d, std::move(unique_pts)), std::move(pred)};
}

std::pair<LatticePolytope, FamilyPrediction> ht_simplex(const Int& c, int d) {
    if (c < 1) throw ParameterError("ht_simplex: requires c >= 1");
    if (d < 3) throw ParameterError("ht_simplex: requires d >= 3");

    std::vector<LatticePoint> pts;
    pts.push_back(LatticePoint(d, Int(0)));
    for (int i = 1; i < d; ++i) pts.push_back(unit(i, d));
    pts.push_back(lifted(diagonal(c * d, d), 1));

    FamilyPrediction pred{Int(d + 1), c, c * d + 1};
    return {validate_polytope(d, std::move(pts)), std::move(pred)};
}

LatticePolytope cube(int d) {
    if (d < 3) throw ParameterError("cube: requires d >= 3");
    std::vector<LatticePoint> pts;
    pts.reserve(std::size_t(1) << d);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        LatticePoint p(d);
        for (int i = 0; i < d; ++i) p[i] = (mask >> i & 1) ? 1 : -1;
        pts.push_back(std::move(p));
    }
    return validate_polytope(d, std::move(pts));
}

LatticePolytope example_prism_r3() {
    std::vector<LatticePoint> pts = {
        {Int(-1), Int(-1), Int(1)},  {Int(2), Int(-1), Int(1)},  {Int(-1), Int(2), Int(1)},
        {Int(-1), Int(-1), Int(-1)}, {Int(2), Int(-1), Int(-1)}, {Int(-1), Int(2), Int(-1)},
    };
    return validate_polytope(3, std::move(pts));
}

}  // namespace castelnuovo
