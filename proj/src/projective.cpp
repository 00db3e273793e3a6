#include "rnckit/projective.hpp"

#include <sstream>

#include "rnckit/errors.hpp"

namespace rnckit {

ProjPoint::ProjPoint(Vector coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionMismatch("point needs at least one coordinate");
    if (rnckit::is_zero(coords_)) throw Error("the zero vector is not a projective point");
    normalize_first(coords_);
}

std::string ProjPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ":";
        s += rnckit::to_string(coords_[i]);
    }
    return s + ")";
}

Scalar LinForm::operator()(const ProjPoint& p) const { return (*this)(p.coords()); }

Scalar LinForm::operator()(const Vector& x) const {
    if (x.size() != coeffs_.size()) throw DimensionMismatch("form and point live in different spaces");
    return dot(coeffs_, x);
}

LinForm& LinForm::operator+=(const LinForm& o) {
    if (o.coeffs_.size() != coeffs_.size()) throw DimensionMismatch("adding forms on different spaces");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

LinForm& LinForm::operator*=(const Scalar& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

std::string LinForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Scalar c = coeffs_[i];
        if (rnckit::is_zero(c)) continue;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (c != 1) os << rnckit::to_string(c) << "*";
        os << "x" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Pencil::Pencil(LinForm f, LinForm g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.coeffs().size() != g_.coeffs().size()) throw DimensionMismatch("pencil forms on different spaces");
    Echelon e = rref(Matrix::from_rows({f_.coeffs(), g_.coeffs()}));
    if (e.pivots.size() != 2) throw DegenerateSpan("pencil forms are linearly dependent");
    canonical_ = std::move(e.reduced);
}

bool Pencil::contains_form(const LinForm& l) const {
    Matrix stack = canonical_;
    stack.append_row(l.coeffs());
    return ff_rank(stack) == 2;
}

bool Pencil::contains_point(const ProjPoint& p) const {
    return is_zero(f_(p)) && is_zero(g_(p));
}

std::vector<Vector> Pencil::spanning_points() const { return nullspace(canonical_); }

LinForm Pencil::member_through(const ProjPoint& p) const {
    return g_(p) * f_ - f_(p) * g_;
}

std::string Pencil::to_string() const {
    return "<" + LinForm(canonical_.row_vector(0)).to_string() + ", " + LinForm(canonical_.row_vector(1)).to_string() + ">";
}

ProjTransform::ProjTransform(Matrix m) : matrix_(std::move(m)) {
    auto inv = rnckit::inverse(matrix_);
    if (!inv) throw Error("projective transform matrix is singular");
    inverse_ = std::move(*inv);
}

ProjTransform ProjTransform::inverse() const { return ProjTransform(inverse_); }

ProjPoint apply_transform(const ProjTransform& t, const ProjPoint& p) {
    if (t.n() != p.n()) throw DimensionMismatch("transform and point dimensions differ");
    return ProjPoint(t.matrix().apply(p.coords()));
}

LinForm apply_transform(const ProjTransform& t, const LinForm& l) {
    if (t.n() != l.n()) throw DimensionMismatch("transform and form dimensions differ");
    // row vector l times A^{-1}
    return LinForm(t.inverse_matrix().transpose().apply(l.coeffs()));
}

Pencil apply_transform(const ProjTransform& t, const Pencil& lam) {
    return Pencil(apply_transform(t, lam.f()), apply_transform(t, lam.g()));
}

namespace {

bool next_combination(std::vector<long>& idx, long total) {
    const long k = static_cast<long>(idx.size());
    for (long i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < total - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (long j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<long> dependent_subset(const std::vector<ProjPoint>& points) {
    if (points.empty()) return {};
    const long dim = points.front().n() + 1;
    const long total = static_cast<long>(points.size());
    if (total < dim) {
        Matrix m(0, static_cast<std::size_t>(dim));
        for (const auto& p : points) m.append_row(p.coords());
        if (ff_rank(m) < points.size()) {
            std::vector<long> all(points.size());
            for (long i = 0; i < total; ++i) all[static_cast<std::size_t>(i)] = i;
            return all;
        }
        return {};
    }
    std::vector<long> idx(static_cast<std::size_t>(dim));
    for (long i = 0; i < dim; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
        Matrix m(0, static_cast<std::size_t>(dim));
        for (long i : idx) m.append_row(points[static_cast<std::size_t>(i)].coords());
        if (is_zero(determinant(m))) return idx;
    } while (next_combination(idx, total));
    return {};
}

ProjTransform frame_map(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw DimensionMismatch("frame_map needs points");
    const int n = points.front().n();
    if (static_cast<int>(points.size()) != n + 2) throw DimensionMismatch("frame_map needs exactly n+2 points");
    for (const auto& p : points)
        if (p.n() != n) throw DimensionMismatch("frame points in different spaces");
    std::vector<Vector> cols;
    for (int i = 0; i <= n; ++i) cols.push_back(points[static_cast<std::size_t>(i)].coords());
    Matrix a = Matrix::from_columns(cols);
    auto c = linsolve(a, points.back().coords());
    std::vector<long> first(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) first[static_cast<std::size_t>(i)] = i;
    if (is_zero(determinant(a)) || !c) throw NotGeneric("frame", "first n+1 points are dependent", first);
    for (int i = 0; i <= n; ++i) {
        if (is_zero((*c)[static_cast<std::size_t>(i)])) {
            std::vector<long> witness;
            for (int j = 0; j <= n + 1; ++j)
                if (j != i) witness.push_back(j);
            throw NotGeneric("frame", "last point lies on a hyperplane spanned by others", witness);
        }
    }
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t col = 0; col < a.cols(); ++col) a(r, col) *= (*c)[col];
    return ProjTransform(a).inverse();
}

Pencil pencil_from_points(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw DimensionMismatch("pencil_from_points needs points");
    const int n = points.front().n();
    if (n < 3) throw DimensionMismatch("codimension-two spaces need n >= 3");
    if (static_cast<int>(points.size()) != n - 1) throw DimensionMismatch("pencil_from_points needs n-1 points");
    Matrix m(0, static_cast<std::size_t>(n) + 1);
    for (const auto& p : points) {
        if (p.n() != n) throw DimensionMismatch("points in different spaces");
        m.append_row(p.coords());
    }
    auto kernel = nullspace(m);
    if (kernel.size() != 2) throw DegenerateSpan("points do not span a codimension-two space");
    return Pencil(LinForm(kernel[0]), LinForm(kernel[1]));
}

}  // namespace rnckit
