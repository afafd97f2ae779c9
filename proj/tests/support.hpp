#pragma once

// Helpers shared by the unit tests.

#include <cstdint>
#include <random>
#include <vector>

#include <ccdim/ccdim.hpp>

namespace ccdim::test {

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> e(0, f.q() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Elem>(e(rng));
    return m;
}

/// Codes used by the property tests: 120 random codes, q in {2,3,4,5}, n <= 8, k <= 4.
inline std::vector<LinearCode> small_suite(std::uint64_t seed = 7) {
    return claims::random_suite(seed, 120, {2, 3, 4, 5}, 8, 4, 0.1, default_caps());
}

/// Basis of the intersection of two row spaces.
inline Matrix intersection(const Matrix& a, const Matrix& b) {
    const Matrix k = kernel_basis(a.stack(b).transpose());
    Matrix coeffs(a.field(), k.rows(), a.rows());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) coeffs(i, j) = k(i, j);
    return row_space_basis(coeffs * a);
}

inline Matrix rows_of(const Field& f, const std::vector<std::vector<Elem>>& rows, std::size_t width) {
    Matrix m(f, rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace ccdim::test
