#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rnckit/binary_form.hpp"
#include "rnckit/matrix.hpp"

namespace rnckit {

/// Degree-d monomials in k variables, ordered by descending exponent vector
/// (x0^2, x0*x1, ..., x1^2, ... for quadrics).
class MonomialBasis {
public:
    MonomialBasis(int nvars, int degree);

    int nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return exps_.size(); }
    const std::vector<int>& exponents(std::size_t i) const { return exps_[i]; }
    std::size_t index_of(const std::vector<int>& e) const;

private:
    int nvars_;
    int degree_;
    std::vector<std::vector<int>> exps_;
    std::vector<std::size_t> lookup_;  // dense table keyed by base-(d+1) code
};

/// Shared, lazily built basis. Thread-safe.
const MonomialBasis& monomial_basis(int nvars, int degree);

/// Homogeneous polynomial in x0..x(k-1), dense over a MonomialBasis.
class Form {
public:
    Form(int nvars, int degree);
    Form(int nvars, int degree, Vector coeffs);

    static Form linear(const Vector& coeffs);

    int nvars() const noexcept { return basis_->nvars(); }
    int degree() const noexcept { return basis_->degree(); }
    const MonomialBasis& basis() const noexcept { return *basis_; }
    const Vector& coeffs() const noexcept { return coeffs_; }
    Scalar& coeff(std::size_t i) { return coeffs_[i]; }
    bool is_zero() const { return rnckit::is_zero(coeffs_); }

    Scalar evaluate(const Vector& x) const;

    /// Substitutes x = subst * y, i.e. x_i becomes row i of `subst` as a linear form in y.
    Form substitute(const Matrix& subst) const;

    /// Composition with a map P^1 -> P^k given by k forms of equal degree.
    BinaryForm compose(const std::vector<BinaryForm>& phi) const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Scalar& k);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& k) { return a *= k; }
    friend Form operator*(const Form& a, const Form& b);
    friend bool operator==(const Form& a, const Form& b) {
        return a.nvars() == b.nvars() && a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    const MonomialBasis* basis_;
    Vector coeffs_;
};

}  // namespace rnckit
