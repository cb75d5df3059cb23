#include "ginlex/linalg.hpp"

#include "ginlex/errors.hpp"

namespace ginlex {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Row echelon elimination in place; returns (rank, determinant-of-leading-
// square-part if square else 0). Pivot choice: first nonzero in column,
// which keeps results deterministic.
std::pair<std::size_t, Rational> eliminate(Matrix& m, bool want_det) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Rational det(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) {
            if (want_det) det = 0;
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            det = -det;
        }
        const Rational p = m.at(r, c);
        if (want_det) det *= p;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c) / p;
            m.at(i, c) = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                m.at(i, j) -= f * m.at(r, j);
            }
        }
        ++r;
    }
    if (want_det && r < rows) det = 0;
    return {r, det};
}

} // namespace

std::size_t rank(Matrix m) {
    return eliminate(m, false).first;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw shape_error("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    return eliminate(m, true).second;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw shape_error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    // Gauss-Jordan on [m | I].
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = r;
        while (pivot < n && aug.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != r) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(pivot, j), aug.at(r, j));
        }
        const Rational p = aug.at(r, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(r, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug.at(i, c) == 0) continue;
            const Rational f = aug.at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        ++r;
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    }
    return inv;
}

Matrix matrix_from_int_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw shape_error("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(static_cast<long>(rows[i][j]));
    }
    return m;
}

} // namespace ginlex
