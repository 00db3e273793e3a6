#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rnckit/scalar.hpp"

namespace rnckit {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;

    void append_row(std::span<const Scalar> r);

    Matrix transpose() const;
    Vector apply(const Vector& x) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled integer matrix.
std::size_t ff_rank(const Matrix& m);

/// Determinant of a square matrix, fraction-free.
Scalar determinant(const Matrix& m);

struct Echelon {
    Matrix reduced;                   // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(const Matrix& m);

/// Basis of the right kernel. Vector k has a 1 in the k-th free column and
/// zeros in the other free columns, so the basis is canonical for the kernel.
std::vector<Vector> nullspace(const Matrix& m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> linsolve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace rnckit
