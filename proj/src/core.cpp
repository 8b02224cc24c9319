#include "castelnuovo/core.hpp"

#include <algorithm>
#include <set>

namespace castelnuovo {

Int determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatchError("determinant: matrix is not square");

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    return sign < 0 ? Int(-det) : det;
}

int matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw DimensionMismatchError("matrix_rank: ragged matrix");

    std::size_t row = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row) std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

int affine_rank(const std::vector<LatticePoint>& points) {
    if (points.empty()) throw DimensionMismatchError("affine_rank: empty point set");
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d)
            throw DimensionMismatchError("affine_rank: points of differing coordinate length");
    if (points.size() == 1) return 0;

    std::vector<std::vector<Int>> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Int> row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    return matrix_rank(std::move(diffs));
}

LatticePolytope validate_polytope(int dim, std::vector<LatticePoint> points) {
    if (dim < 1) throw ParameterError("validate_polytope: dim must be >= 1");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionMismatchError("validate_polytope: point length does not match dim");

    std::set<LatticePoint> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second)
            throw DuplicateVertexError("validate_polytope: duplicate point in input");

    if (points.empty() || affine_rank(points) != dim)
        throw NotFullDimensionalError("validate_polytope: point set does not span dimension " +
                                      std::to_string(dim));

    return LatticePolytope{dim, std::move(points)};
}

}  // namespace castelnuovo
