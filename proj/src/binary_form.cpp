#include "rnckit/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "rnckit/errors.hpp"

namespace rnckit {

namespace {

// Univariate polynomials in s, low-to-high, with no trailing zeros (zero = empty).
using Poly = Vector;

void trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly dehomogenize(const BinaryForm& f) {
    Poly p = f.coeffs();
    trim(p);
    return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of a by b (b nonzero); quotient stored when q != nullptr.
Poly poly_divmod(Poly a, const Poly& b, Poly* q) {
    const int db = poly_degree(b);
    if (q) q->assign(std::max<int>(poly_degree(a) - db + 1, 0), Scalar(0));
    const Scalar lead_inv = 1 / b.back();
    while (poly_degree(a) >= db) {
        const int shift = poly_degree(a) - db;
        Scalar factor = a.back() * lead_inv;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= factor * b[static_cast<std::size_t>(i)];
        if (q) (*q)[static_cast<std::size_t>(shift)] = factor;
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_monic(Poly p) {
    if (p.empty()) return p;
    Scalar inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_divmod(a, b, nullptr);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

BinaryForm homogenize(const Poly& p, int degree) {
    Vector c(static_cast<std::size_t>(degree) + 1);
    std::copy(p.begin(), p.end(), c.begin());
    return BinaryForm(std::move(c));
}

}  // namespace

BinaryForm::BinaryForm(int degree) : coeffs_(static_cast<std::size_t>(std::max(degree, 0)) + 1) {
    if (degree < 0) throw Error("negative binary form degree");
}

BinaryForm::BinaryForm(Vector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::linear(const Scalar& a, const Scalar& b) { return BinaryForm(Vector{b, a}); }

BinaryForm BinaryForm::constant(const Scalar& c) { return BinaryForm(Vector{c}); }

Scalar BinaryForm::evaluate(const Scalar& s, const Scalar& u) const {
    Scalar acc = 0;
    Scalar spow = 1;
    std::vector<Scalar> upows(coeffs_.size());
    upows[0] = 1;
    for (std::size_t i = 1; i < upows.size(); ++i) upows[i] = upows[i - 1] * u;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!rnckit::is_zero(coeffs_[k])) acc += coeffs_[k] * spow * upows[coeffs_.size() - 1 - k];
        spow *= s;
    }
    return acc;
}

int BinaryForm::u_multiplicity() const {
    return degree() - poly_degree(dehomogenize(*this));
}

int BinaryForm::s_multiplicity() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!rnckit::is_zero(coeffs_[k])) return static_cast<int>(k);
    return degree() + 1;
}

BinaryForm BinaryForm::monic() const {
    Vector c = coeffs_;
    normalize_last(c);
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::substitute(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const {
    const int n = degree();
    const BinaryForm sl = linear(a, b);
    const BinaryForm ul = linear(c, d);
    std::vector<BinaryForm> spow{constant(1)}, upow{constant(1)};
    for (int k = 1; k <= n; ++k) {
        spow.push_back(spow.back() * sl);
        upow.push_back(upow.back() * ul);
    }
    BinaryForm out(n);
    for (int k = 0; k <= n; ++k) {
        const Scalar& ck = coeffs_[static_cast<std::size_t>(k)];
        if (rnckit::is_zero(ck)) continue;
        out += spow[static_cast<std::size_t>(k)] * upow[static_cast<std::size_t>(n - k)] * ck;
    }
    return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.degree() != degree()) throw DimensionMismatch("adding binary forms of different degree");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
    if (o.degree() != degree()) throw DimensionMismatch("subtracting binary forms of different degree");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

BinaryForm& BinaryForm::operator*=(const Scalar& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    Vector c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BinaryForm(std::move(c));
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    const int d = degree();
    for (int k = d; k >= 0; --k) {
        Scalar c = coeffs_[static_cast<std::size_t>(k)];
        if (rnckit::is_zero(c)) continue;
        std::string mono;
        auto power = [](const char* v, int e) {
            if (e == 0) return std::string();
            return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
        };
        std::string sp = power("s", k), up = power("u", d - k);
        mono = sp.empty() ? up : (up.empty() ? sp : sp + "*" + up);
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mono.empty()) {
            os << rnckit::to_string(c);
        } else {
            if (c != 1) os << rnckit::to_string(c) << "*";
            os << mono;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool divides(const BinaryForm& g, const BinaryForm& f) {
    if (g.is_zero()) throw ZeroForm();
    if (f.is_zero()) return true;
    if (g.degree() > f.degree()) return false;
    if (g.u_multiplicity() > f.u_multiplicity()) return false;
    Poly r = poly_divmod(dehomogenize(f), dehomogenize(g), nullptr);
    return r.empty();
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
    if (!divides(g, f)) throw Error("binary form does not divide exactly");
    const int degree = f.degree() - g.degree();
    if (f.is_zero()) return BinaryForm(degree);
    Poly q;
    poly_divmod(dehomogenize(f), dehomogenize(g), &q);
    trim(q);
    return homogenize(q, degree);
}

BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
    const bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) throw BothZero();
    if (fz) return g.monic();
    if (gz) return f.monic();
    Poly h = poly_gcd(dehomogenize(f), dehomogenize(g));
    const int mu = std::min(f.u_multiplicity(), g.u_multiplicity());
    return homogenize(h, poly_degree(h) + mu);
}

bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm();
    if (f.u_multiplicity() >= 2) return false;
    Poly p = dehomogenize(f);
    return poly_degree(poly_gcd(p, poly_derivative(p))) == 0;
}

}  // namespace rnckit
