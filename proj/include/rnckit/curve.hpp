#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rnckit/binary_form.hpp"
#include "rnckit/datum.hpp"
#include "rnckit/form.hpp"
#include "rnckit/projective.hpp"

namespace rnckit {

/// Point (s:u) of P^1, normalized to (t:1) or (1:0).
struct Param {
    Scalar s;
    Scalar u;

    Param(Scalar s_, Scalar u_);
    static Param affine(const Scalar& t) { return Param(t, 1); }
    static Param infinity() { return Param(1, 0); }

    bool is_infinity() const { return is_zero(u); }
    friend bool operator==(const Param&, const Param&) = default;
    /// "t" for affine parameters, "inf" for (1:0).
    std::string to_string() const;
};

/// A rational normal curve given by n+1 binary forms of degree n with an
/// invertible coefficient matrix (row i holds the coefficients of form i).
class ParamRnc {
public:
    /// Throws NotGeneric if the forms do not define a degree-n normal embedding.
    explicit ParamRnc(std::vector<BinaryForm> forms);

    /// The moment curve s^k u^(n-k), k = 0..n.
    static ParamRnc moment(int n);

    int n() const noexcept { return static_cast<int>(forms_.size()) - 1; }
    const std::vector<BinaryForm>& forms() const noexcept { return forms_; }
    const Matrix& coefficient_matrix() const noexcept { return coeffs_; }
    const Matrix& inverse_coefficients() const noexcept { return inverse_; }

    /// The same curve reparametrized by (s, u) -> (a s + b u, c s + d u).
    ParamRnc reparametrize(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;

    friend bool operator==(const ParamRnc& a, const ParamRnc& b) { return a.forms_ == b.forms_; }

private:
    std::vector<BinaryForm> forms_;
    Matrix coeffs_;
    Matrix inverse_;
};

/// Top and bottom rows of a 2 x n matrix of linear forms.
struct LinFormGrid {
    std::vector<LinForm> top;
    std::vector<LinForm> bottom;

    friend bool operator==(const LinFormGrid&, const LinFormGrid&) = default;
};

/// A rational normal curve given as the rank-one locus of a 2 x n matrix of
/// linear forms. Construction computes (and keeps) a parametrization, so a
/// DetRnc always satisfies the genericity its name promises.
class DetRnc {
public:
    explicit DetRnc(LinFormGrid m);

    int n() const noexcept { return static_cast<int>(m_.top.size()); }
    const LinFormGrid& grid() const noexcept { return m_; }
    const LinForm& top(std::size_t j) const { return m_.top[j]; }
    const LinForm& bottom(std::size_t j) const { return m_.bottom[j]; }
    const ParamRnc& param() const noexcept { return param_; }

    /// The C(n,2) quadrics cut out by the 2x2 minors.
    std::vector<Form> minors() const;

    friend bool operator==(const DetRnc& a, const DetRnc& b) { return a.m_ == b.m_; }

private:
    LinFormGrid m_;
    ParamRnc param_;
};

struct SecancyResult {
    int degree = 0;
    BinaryForm d_form;
    bool smooth = true;
    bool is_n_minus_1_secant = false;

    friend bool operator==(const SecancyResult&, const SecancyResult&) = default;
};

struct VerificationReport {
    std::vector<std::optional<Param>> point_params;
    std::vector<SecancyResult> spaces;
    bool passed = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Parametrizes the rank-one locus: the point at (s:u) spans the kernel of
/// {u F_i - s G_i = 0}, given by signed maximal minors (interpolated exactly).
/// Throws NotGeneric("det_to_param", ...) when the matrix is not generic.
ParamRnc det_to_param(const LinFormGrid& m);
inline const ParamRnc& det_to_param(const DetRnc& c) { return c.param(); }

/// Transports the shifted Hankel matrix of the moment curve by the inverse
/// coefficient matrix. On the curve, column j reads (M1j : M2j) = (s : u).
DetRnc param_to_det(const ParamRnc& c);

ProjPoint point_at(const ParamRnc& c, const Param& t);
std::optional<Param> param_of_point(const ParamRnc& c, const ProjPoint& p);

BinaryForm restrict_form(const ParamRnc& c, const LinForm& l);

SecancyResult secancy(const ParamRnc& c, const Pencil& lam);

/// lambda != 0 with span{sum lambda_i M1i, sum lambda_i M2i} = span{f, g},
/// first nonzero entry 1; nullopt if the pencil is no generalized column.
std::optional<Vector> generalized_column_for(const DetRnc& c, const Pencil& lam);

/// Span of the n-1 curve points at pairwise distinct parameters.
Pencil chord_space(const ParamRnc& c, const std::vector<Param>& params);

/// Basis of the quadrics containing the curve (dimension C(n,2)).
std::vector<Form> quadrics_through(const ParamRnc& c);

bool curve_equals(const ParamRnc& a, const ParamRnc& b);
bool curve_equals(const DetRnc& a, const ParamRnc& b);
bool curve_equals(const ParamRnc& a, const DetRnc& b);
bool curve_equals(const DetRnc& a, const DetRnc& b);

VerificationReport verify_datum(const ParamRnc& c, const Datum& d);

ParamRnc apply_transform(const ProjTransform& t, const ParamRnc& c);
DetRnc apply_transform(const ProjTransform& t, const DetRnc& c);

}  // namespace rnckit
