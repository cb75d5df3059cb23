// Dense exact linear algebra over the rationals: rank, determinant, inverse
// by fraction-free-in-spirit Gaussian elimination on mpq entries. Verdicts
// are exact; there is no pivot tolerance because there is no floating point.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ginlex/rational.hpp"

namespace ginlex {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(Matrix m);

/// Exact determinant. Throws shape_error unless square. The 0x0 determinant
/// is 1 (empty product).
Rational determinant(Matrix m);

/// Exact inverse, or nullopt when singular. Throws shape_error unless square.
std::optional<Matrix> inverse(const Matrix& m);

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && determinant(m) != 0;
}

/// Builds a matrix from integer rows (row-major).
Matrix matrix_from_int_rows(const std::vector<std::vector<long long>>& rows);

} // namespace ginlex
