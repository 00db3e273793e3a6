#include "rnckit/obstruction.hpp"

#include "rnckit/errors.hpp"

namespace rnckit {

namespace {

Scalar monomial_value(const std::vector<int>& e, const Vector& x) {
    Scalar v = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) v *= x[i];
    return v;
}

Vector value_row(const MonomialBasis& basis, const Vector& x) {
    Vector row(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) row[m] = monomial_value(basis.exponents(m), x);
    return row;
}

// Polar form Q(x + y) - Q(x) - Q(y) as a row over the monomial basis.
Vector polar_row(const MonomialBasis& basis, const Vector& x, const Vector& y) {
    Vector sum(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
    Vector row(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const auto& e = basis.exponents(m);
        row[m] = monomial_value(e, sum) - monomial_value(e, x) - monomial_value(e, y);
    }
    return row;
}

// A quadric vanishes on span{q_1..q_k} iff Q(q_a) = 0 and the polar form
// vanishes on every pair: C(k+1, 2) conditions.
void append_space_rows(Matrix& rows, const MonomialBasis& basis, const Pencil& lam) {
    const auto pts = lam.spanning_points();
    for (std::size_t a = 0; a < pts.size(); ++a) {
        rows.append_row(value_row(basis, pts[a]));
        for (std::size_t b = a + 1; b < pts.size(); ++b) rows.append_row(polar_row(basis, pts[a], pts[b]));
    }
}

long choose(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

Form obstruction_quadric(const Pencil& l1, const Pencil& l2, const ProjPoint& p1, const ProjPoint& p2,
                         const ProjPoint& p3) {
    const int n = l1.n();
    if (n < 3) throw BadDimension("obstruction quadrics need n >= 3");
    if (l2.n() != n || p1.n() != n || p2.n() != n || p3.n() != n)
        throw DimensionMismatch("obstruction data live in different spaces");
    const MonomialBasis& basis = monomial_basis(n + 1, 2);
    Matrix rows(0, basis.size());
    append_space_rows(rows, basis, l1);
    append_space_rows(rows, basis, l2);
    for (const auto* p : {&p1, &p2, &p3}) rows.append_row(value_row(basis, p->coords()));

    auto kernel = nullspace(rows);
    if (kernel.size() != 1) {
        const long expected = 2 * choose(n, 2) - choose(n - 2, 2) + 3;
        throw NotGeneric("obstruction_quadric",
                         "conditions have rank " + std::to_string(basis.size() - kernel.size()) + ", expected " +
                             std::to_string(expected),
                         {static_cast<long>(kernel.size())});
    }
    normalize_last(kernel[0]);
    return Form(n + 1, 2, std::move(kernel[0]));
}

bool quadric_contains(const Form& q, const Pencil& lam) {
    const int n = lam.n();
    if (q.degree() != 2 || q.nvars() != n + 1) throw DimensionMismatch("expected a quadric on P^n");
    // Solve q = f A + g B for linear A, B.
    const MonomialBasis& basis = q.basis();
    const auto nv = static_cast<std::size_t>(n) + 1;
    Matrix system(basis.size(), 2 * nv);
    const Form f = Form::linear(lam.f().coeffs()), g = Form::linear(lam.g().coeffs());
    for (std::size_t j = 0; j < nv; ++j) {
        Vector e(nv);
        e[j] = 1;
        const Form xj = Form::linear(e);
        const Form fa = f * xj, gb = g * xj;
        for (std::size_t m = 0; m < basis.size(); ++m) {
            system(m, j) = fa.coeffs()[m];
            system(m, nv + j) = gb.coeffs()[m];
        }
    }
    return linsolve(system, q.coeffs()).has_value();
}

DegreeLedger degree_ledger(int n) { return {2L * n + 1, 2L * n}; }

ObstructionCertificate nonexistence_certificate(const Datum& datum) {
    if (datum.p() + datum.l() != datum.n + 3 || datum.p() < 4 || datum.l() < 2)
        throw BadShape("obstruction needs p >= 4, l >= 2 and p + l = n + 3");
    ObstructionCertificate cert;
    cert.datum = datum;
    cert.quadric = obstruction_quadric(datum.spaces[0], datum.spaces[1], datum.points[0], datum.points[1],
                                       datum.points[2]);
    cert.contains = {quadric_contains(cert.quadric, datum.spaces[0]), quadric_contains(cert.quadric, datum.spaces[1]),
                     is_zero(cert.quadric.evaluate(datum.points[0].coords())),
                     is_zero(cert.quadric.evaluate(datum.points[1].coords())),
                     is_zero(cert.quadric.evaluate(datum.points[2].coords()))};
    cert.excluded_point = datum.points[3];
    cert.excluded_value = cert.quadric.evaluate(cert.excluded_point.coords());
    cert.ledger = degree_ledger(datum.n);
    if (is_zero(cert.excluded_value))
        throw ObstructionFails("the quadric through both spaces and three points also contains the fourth point");
    return cert;
}

bool verify_certificate(const ObstructionCertificate& c) {
    const Datum& d = c.datum;
    if (d.p() < 4 || d.l() < 2 || d.p() + d.l() != d.n + 3) return false;
    if (c.quadric.nvars() != d.n + 1 || c.quadric.degree() != 2 || c.quadric.is_zero()) return false;
    const std::array<bool, 5> contains = {
        quadric_contains(c.quadric, d.spaces[0]), quadric_contains(c.quadric, d.spaces[1]),
        is_zero(c.quadric.evaluate(d.points[0].coords())), is_zero(c.quadric.evaluate(d.points[1].coords())),
        is_zero(c.quadric.evaluate(d.points[2].coords()))};
    for (bool b : contains)
        if (!b) return false;
    if (contains != c.contains || !(c.excluded_point == d.points[3])) return false;
    const Scalar value = c.quadric.evaluate(c.excluded_point.coords());
    if (is_zero(value) || value != c.excluded_value) return false;
    const DegreeLedger expected = degree_ledger(d.n);
    return c.ledger.intersection_lower_bound == expected.intersection_lower_bound &&
           c.ledger.bezout_bound == expected.bezout_bound &&
           c.ledger.intersection_lower_bound > c.ledger.bezout_bound;
}

}  // namespace rnckit
