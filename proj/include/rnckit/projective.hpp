#pragma once

#include <string>
#include <vector>

#include "rnckit/matrix.hpp"

namespace rnckit {

/// Point of P^n, stored with its first nonzero coordinate equal to 1.
class ProjPoint {
public:
    explicit ProjPoint(Vector coords);

    int n() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    const Vector& coords() const noexcept { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    std::string to_string() const;

private:
    Vector coords_;
};

/// Linear form sum c_i x_i on P^n.
class LinForm {
public:
    LinForm() = default;
    explicit LinForm(Vector coeffs) : coeffs_(std::move(coeffs)) {}

    int n() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Vector& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const { return rnckit::is_zero(coeffs_); }

    Scalar operator()(const ProjPoint& p) const;
    Scalar operator()(const Vector& x) const;

    LinForm& operator+=(const LinForm& o);
    LinForm& operator*=(const Scalar& k);
    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a += b * Scalar(-1); }
    friend LinForm operator*(LinForm a, const Scalar& k) { return a *= k; }
    friend LinForm operator*(const Scalar& k, LinForm a) { return a *= k; }

    friend bool operator==(const LinForm&, const LinForm&) = default;
    std::string to_string() const;

private:
    Vector coeffs_;
};

/// Codimension-two linear space {f = g = 0}, kept as a pencil of forms.
/// Two pencils compare equal iff their reduced row-echelon stacks agree.
class Pencil {
public:
    /// Throws DegenerateSpan if f and g are dependent.
    Pencil(LinForm f, LinForm g);

    int n() const noexcept { return f_.n(); }
    const LinForm& f() const noexcept { return f_; }
    const LinForm& g() const noexcept { return g_; }
    /// 2 x (n+1) reduced row-echelon stack of the span.
    const Matrix& canonical() const noexcept { return canonical_; }

    bool contains_form(const LinForm& l) const;
    bool contains_point(const ProjPoint& p) const;

    /// n-1 points spanning the zero locus.
    std::vector<Vector> spanning_points() const;

    /// The member g(p) f - f(p) g, which vanishes at p. Zero iff p lies on the space.
    LinForm member_through(const ProjPoint& p) const;

    friend bool operator==(const Pencil& a, const Pencil& b) { return a.canonical_ == b.canonical_; }
    std::string to_string() const;

private:
    LinForm f_;
    LinForm g_;
    Matrix canonical_;
};

/// Invertible projective transformation x -> A x of P^n.
class ProjTransform {
public:
    explicit ProjTransform(Matrix m);

    int n() const noexcept { return static_cast<int>(matrix_.rows()) - 1; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Matrix& inverse_matrix() const noexcept { return inverse_; }
    ProjTransform inverse() const;

    friend ProjTransform operator*(const ProjTransform& a, const ProjTransform& b) {
        return ProjTransform(a.matrix_ * b.matrix_);
    }

private:
    Matrix matrix_;
    Matrix inverse_;
};

ProjPoint apply_transform(const ProjTransform& t, const ProjPoint& p);
/// Forms map by the inverse transpose, so (t.l)(t.p) = l(p).
LinForm apply_transform(const ProjTransform& t, const LinForm& l);
Pencil apply_transform(const ProjTransform& t, const Pencil& lam);

/// The unique transform sending points[0..n] to the coordinate points and
/// points[n+1] to (1:...:1). Requires n+2 points in linearly general position.
ProjTransform frame_map(const std::vector<ProjPoint>& points);

/// The codimension-two space spanned by n-1 independent points of P^n (n >= 3).
Pencil pencil_from_points(const std::vector<ProjPoint>& points);

/// Indices of a dependent (n+1)-subset, empty if all are independent.
std::vector<long> dependent_subset(const std::vector<ProjPoint>& points);

}  // namespace rnckit
