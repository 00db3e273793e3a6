#include "rnckit/matrix.hpp"

#include <utility>

#include "rnckit/errors.hpp"

namespace rnckit {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(0, rows.front().size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows()) throw DimensionMismatch("ragged columns");
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::append_row(std::span<const Scalar> r) {
    if (rows_ == 0 && data_.empty()) cols_ = r.size();
    if (r.size() != cols_) throw DimensionMismatch("row length does not match column count");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!is_zero(x[c])) acc += (*this)(r, c) * x[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

namespace {

using IntGrid = std::vector<std::vector<Integer>>;

// Clears denominators row by row; returns the product of the row multipliers.
IntGrid integer_rows(const Matrix& m, Scalar* scale = nullptr) {
    IntGrid g(m.rows(), std::vector<Integer>(m.cols()));
    Scalar total = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Scalar& x = m(r, c);
            g[r][c] = x.get_num() * (l / x.get_den());
        }
        total *= l;
    }
    if (scale) *scale = total;
    return g;
}

// In-place Bareiss forward elimination. Returns the rank; `sign` tracks row swaps
// and `last_pivot` ends up as the determinant of a full-rank square input.
std::size_t bareiss(IntGrid& a, std::size_t cols, int& sign, Integer& last_pivot) {
    const std::size_t rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    sign = 1;
    Integer tmp;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                // a[i][j] = (piv * a[i][j] - lead * a[r][j]) / prev, exactly
                tmp = piv * a[i][j];
                if (lead != 0) tmp -= lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    last_pivot = prev;
    return r;
}

}  // namespace

std::size_t ff_rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntGrid g = integer_rows(m);
    int sign = 1;
    Integer piv;
    return bareiss(g, m.cols(), sign, piv);
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Scalar scale;
    IntGrid g = integer_rows(m, &scale);
    int sign = 1;
    Integer piv;
    std::size_t rank = bareiss(g, m.cols(), sign, piv);
    if (rank < m.rows()) return 0;
    Scalar det(piv * sign);
    return det / scale;
}

Echelon rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = 1 / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(0, cols);
    for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
    return {std::move(reduced), std::move(pivots)};
}

std::vector<Vector> nullspace(const Matrix& m) {
    const std::size_t cols = m.cols();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> linsolve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
    const std::size_t cols = m.cols();
    Matrix aug(m.rows(), cols + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
        aug(r, cols) = b[r];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    Vector x(cols);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, cols);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

}  // namespace rnckit
