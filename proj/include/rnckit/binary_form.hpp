#pragma once

#include <string>

#include "rnckit/scalar.hpp"

namespace rnckit {

/// Homogeneous polynomial in (s, u) of a fixed formal degree d.
/// coeffs()[k] is the coefficient of s^k u^(d-k). The zero form is allowed.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1) {}
    explicit BinaryForm(int degree);
    explicit BinaryForm(Vector coeffs);

    /// a*s + b*u
    static BinaryForm linear(const Scalar& a, const Scalar& b);
    static BinaryForm constant(const Scalar& c);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Vector& coeffs() const noexcept { return coeffs_; }
    const Scalar& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    bool is_zero() const { return rnckit::is_zero(coeffs_); }

    Scalar evaluate(const Scalar& s, const Scalar& u) const;

    /// Multiplicity of the root (1:0), i.e. of the factor u. Undefined for zero.
    int u_multiplicity() const;
    /// Multiplicity of the root (0:1), i.e. of the factor s.
    int s_multiplicity() const;

    /// Scaled so the highest-index nonzero coefficient is 1.
    BinaryForm monic() const;

    /// f(a*s + b*u, c*s + d*u)
    BinaryForm substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    BinaryForm& operator*=(const Scalar& k);

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(BinaryForm a, const Scalar& k) { return a *= k; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    std::string to_string() const;

private:
    Vector coeffs_;
};

/// True iff g divides f exactly (f may be zero; g must be nonzero).
bool divides(const BinaryForm& g, const BinaryForm& f);

/// Exact quotient f / g. Throws Error if g does not divide f.
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);

/// Monic gcd. Euclid runs on the u = 1 dehomogenizations; the factor u (the
/// root at (1:0)) is accounted for separately since dehomogenizing drops it.
BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g);

/// True iff f has no repeated root in P^1.
bool is_squarefree(const BinaryForm& f);

}  // namespace rnckit
