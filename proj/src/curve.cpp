#include "rnckit/curve.hpp"

#include "rnckit/errors.hpp"

namespace rnckit {

Param::Param(Scalar s_, Scalar u_) : s(std::move(s_)), u(std::move(u_)) {
    if (rnckit::is_zero(s) && rnckit::is_zero(u)) throw ZeroParameter();
    if (rnckit::is_zero(u)) {
        s = 1;
    } else {
        s /= u;
        u = 1;
    }
}

std::string Param::to_string() const { return is_infinity() ? "inf" : rnckit::to_string(s); }

namespace {

Matrix coefficient_matrix_of(const std::vector<BinaryForm>& forms) {
    Matrix m(0, forms.size());
    for (const auto& f : forms) m.append_row(f.coeffs());
    return m;
}

}  // namespace

ParamRnc::ParamRnc(std::vector<BinaryForm> forms) : forms_(std::move(forms)) {
    if (forms_.size() < 2) throw DimensionMismatch("a curve in P^n needs n+1 >= 2 forms");
    const int n = static_cast<int>(forms_.size()) - 1;
    for (const auto& f : forms_)
        if (f.degree() != n) throw DimensionMismatch("curve forms must all have degree n");
    coeffs_ = coefficient_matrix_of(forms_);
    auto inv = inverse(coeffs_);
    if (!inv) throw NotGeneric("param", "coefficient matrix is singular");
    inverse_ = std::move(*inv);
}

ParamRnc ParamRnc::moment(int n) {
    std::vector<BinaryForm> forms;
    for (int k = 0; k <= n; ++k) {
        Vector c(static_cast<std::size_t>(n) + 1);
        c[static_cast<std::size_t>(k)] = 1;
        forms.emplace_back(std::move(c));
    }
    return ParamRnc(std::move(forms));
}

ParamRnc ParamRnc::reparametrize(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const {
    if (is_zero(a * d - b * c)) throw Error("reparametrization must be invertible");
    std::vector<BinaryForm> out;
    for (const auto& f : forms_) out.push_back(f.substitute(a, b, c, d));
    return ParamRnc(std::move(out));
}

ParamRnc det_to_param(const LinFormGrid& m) {
    const std::size_t n = m.top.size();
    if (n < 1 || m.bottom.size() != n) throw DimensionMismatch("determinantal matrix must be 2 x n");
    for (std::size_t j = 0; j < n; ++j)
        if (m.top[j].coeffs().size() != n + 1 || m.bottom[j].coeffs().size() != n + 1)
            throw DimensionMismatch("matrix entries must be forms on P^n");

    // x_k(t) = (-1)^k det(A(t) without column k), A(t) rows F_i - t G_i; each x_k
    // has degree <= n in t, so n+1 samples determine it.
    Matrix values(n + 1, n + 1);  // values(sample, k)
    for (std::size_t sample = 0; sample <= n; ++sample) {
        const Scalar t(static_cast<long>(sample));
        Matrix a(n, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c <= n; ++c) a(i, c) = m.top[i].coeffs()[c] - t * m.bottom[i].coeffs()[c];
        for (std::size_t k = 0; k <= n; ++k) {
            Matrix minor(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0, cc = 0; c <= n; ++c) {
                    if (c == k) continue;
                    minor(i, cc++) = a(i, c);
                }
            Scalar det = determinant(minor);
            values(sample, k) = (k % 2 == 0) ? det : Scalar(-det);
        }
    }
    Matrix vandermonde(n + 1, n + 1);
    for (std::size_t sample = 0; sample <= n; ++sample) {
        Scalar pw = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            vandermonde(sample, j) = pw;
            pw *= static_cast<long>(sample);
        }
    }
    auto vinv = inverse(vandermonde);
    std::vector<BinaryForm> forms;
    for (std::size_t k = 0; k <= n; ++k) forms.emplace_back(vinv->apply(values.column(k)));
    try {
        return ParamRnc(std::move(forms));
    } catch (const NotGeneric&) {
        throw NotGeneric("det_to_param", "maximal minors do not define a rational normal curve");
    }
}

DetRnc::DetRnc(LinFormGrid m) : m_(std::move(m)), param_(det_to_param(m_)) {}

std::vector<Form> DetRnc::minors() const {
    std::vector<Form> out;
    const std::size_t n = m_.top.size();
    std::vector<Form> top, bottom;
    for (std::size_t j = 0; j < n; ++j) {
        top.push_back(Form::linear(m_.top[j].coeffs()));
        bottom.push_back(Form::linear(m_.bottom[j].coeffs()));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(top[i] * bottom[j] - top[j] * bottom[i]);
    return out;
}

DetRnc param_to_det(const ParamRnc& c) {
    const int n = c.n();
    const Matrix& inv = c.inverse_coefficients();
    LinFormGrid g;
    for (int j = 0; j < n; ++j) {
        g.top.emplace_back(inv.row_vector(static_cast<std::size_t>(j) + 1));
        g.bottom.emplace_back(inv.row_vector(static_cast<std::size_t>(j)));
    }
    return DetRnc(std::move(g));
}

ProjPoint point_at(const ParamRnc& c, const Param& t) {
    Vector x;
    for (const auto& f : c.forms()) x.push_back(f.evaluate(t.s, t.u));
    return ProjPoint(std::move(x));
}

std::optional<Param> param_of_point(const ParamRnc& c, const ProjPoint& p) {
    if (p.n() != c.n()) throw DimensionMismatch("point and curve dimensions differ");
    // w = C^{-1} p; on the curve w is proportional to (u^n, s u^(n-1), ..., s^n).
    const Vector w = c.inverse_coefficients().apply(p.coords());
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        if (is_zero(w[j]) && is_zero(w[j + 1])) continue;
        Param t(w[j + 1], w[j]);
        if (point_at(c, t) == p) return t;
        return std::nullopt;
    }
    return std::nullopt;
}

BinaryForm restrict_form(const ParamRnc& c, const LinForm& l) {
    if (l.n() != c.n()) throw DimensionMismatch("form and curve dimensions differ");
    BinaryForm out(c.n());
    for (std::size_t i = 0; i < c.forms().size(); ++i) {
        const Scalar& k = l.coeffs()[i];
        if (!is_zero(k)) out += c.forms()[i] * k;
    }
    return out;
}

SecancyResult secancy(const ParamRnc& c, const Pencil& lam) {
    if (lam.n() != c.n()) throw DimensionMismatch("pencil and curve dimensions differ");
    SecancyResult r;
    r.d_form = binary_gcd(restrict_form(c, lam.f()), restrict_form(c, lam.g()));
    r.degree = r.d_form.degree();
    r.smooth = is_squarefree(r.d_form);
    r.is_n_minus_1_secant = r.degree == c.n() - 1 && r.smooth;
    return r;
}

std::optional<Vector> generalized_column_for(const DetRnc& c, const Pencil& lam) {
    if (lam.n() != c.n()) throw DimensionMismatch("pencil and curve dimensions differ");
    const std::size_t n = static_cast<std::size_t>(c.n());
    // sum lambda_i M_ri lies in span{f, g} iff it vanishes on the points spanning the space.
    Matrix cond(0, n);
    for (const auto& q : lam.spanning_points()) {
        Vector top(n), bottom(n);
        for (std::size_t i = 0; i < n; ++i) {
            top[i] = c.top(i)(q);
            bottom[i] = c.bottom(i)(q);
        }
        cond.append_row(top);
        cond.append_row(bottom);
    }
    auto kernel = nullspace(cond);
    if (kernel.empty()) return std::nullopt;
    Vector sum(n);
    for (const auto& k : kernel)
        for (std::size_t i = 0; i < n; ++i) sum[i] += k[i];
    kernel.push_back(sum);
    for (auto& lambda : kernel) {
        LinForm f(Vector(n + 1)), g(Vector(n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            f += c.top(i) * lambda[i];
            g += c.bottom(i) * lambda[i];
        }
        if (ff_rank(Matrix::from_rows({f.coeffs(), g.coeffs()})) < 2) continue;
        normalize_first(lambda);
        return lambda;
    }
    return std::nullopt;
}

Pencil chord_space(const ParamRnc& c, const std::vector<Param>& params) {
    if (static_cast<int>(params.size()) != c.n() - 1) throw DimensionMismatch("chord_space needs n-1 parameters");
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw RepeatedParameter({static_cast<long>(i), static_cast<long>(j)});
    std::vector<ProjPoint> pts;
    for (const auto& t : params) pts.push_back(point_at(c, t));
    return pencil_from_points(pts);
}

std::vector<Form> quadrics_through(const ParamRnc& c) {
    const int nv = c.n() + 1;
    const MonomialBasis& basis = monomial_basis(nv, 2);
    const auto& phi = c.forms();
    Matrix comp(static_cast<std::size_t>(2 * c.n() + 1), basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const auto& e = basis.exponents(m);
        std::size_t i = 0;
        while (e[i] == 0) ++i;
        std::size_t j = i;
        if (e[i] == 1) {
            ++j;
            while (e[j] == 0) ++j;
        }
        BinaryForm prod = phi[i] * phi[j];
        for (std::size_t k = 0; k < prod.coeffs().size(); ++k) comp(k, m) = prod.coeffs()[k];
    }
    std::vector<Form> out;
    for (auto& v : nullspace(comp)) out.emplace_back(nv, 2, std::move(v));
    return out;
}

namespace {

void require_same_n(int a, int b) {
    if (a != b) throw DimensionMismatch("curves live in different spaces");
}

}  // namespace

// Rational normal curves in P^n all lie on exactly C(n,2) independent quadrics
// and are cut out by them, so inclusion of quadric spaces decides equality.
// The Hankel minors psi_j psi_{k+1} - psi_{j+1} psi_k of psi = C_a^{-1} phi_b are
// the quadrics of a (a closed-form basis) evaluated along b.
bool curve_equals(const ParamRnc& a, const ParamRnc& b) {
    require_same_n(a.n(), b.n());
    const Matrix& inv = a.inverse_coefficients();
    const auto& phi = b.forms();
    std::vector<BinaryForm> psi;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        BinaryForm f(b.n());
        for (std::size_t i = 0; i < phi.size(); ++i)
            if (!is_zero(inv(j, i))) f += phi[i] * inv(j, i);
        psi.push_back(std::move(f));
    }
    for (std::size_t j = 0; j + 1 < psi.size(); ++j)
        for (std::size_t k = j + 1; k + 1 < psi.size(); ++k)
            if (!(psi[j] * psi[k + 1] - psi[j + 1] * psi[k]).is_zero()) return false;
    return true;
}

bool curve_equals(const DetRnc& a, const ParamRnc& b) {
    require_same_n(a.n(), b.n());
    // b must lie on the rank-one locus of the grid, which is a's curve.
    std::vector<BinaryForm> top, bottom;
    for (std::size_t j = 0; j < static_cast<std::size_t>(a.n()); ++j) {
        top.push_back(restrict_form(b, a.top(j)));
        bottom.push_back(restrict_form(b, a.bottom(j)));
    }
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j)
            if (!(top[i] * bottom[j] - top[j] * bottom[i]).is_zero()) return false;
    return curve_equals(a.param(), b);
}

bool curve_equals(const ParamRnc& a, const DetRnc& b) { return curve_equals(b, a); }

bool curve_equals(const DetRnc& a, const DetRnc& b) { return curve_equals(a, b.param()); }

VerificationReport verify_datum(const ParamRnc& c, const Datum& d) {
    if (d.n != c.n()) throw DimensionMismatch("curve and datum dimensions differ");
    VerificationReport r;
    r.passed = true;
    for (const auto& p : d.points) {
        r.point_params.push_back(param_of_point(c, p));
        if (!r.point_params.back()) r.passed = false;
    }
    for (const auto& lam : d.spaces) {
        r.spaces.push_back(secancy(c, lam));
        if (!r.spaces.back().is_n_minus_1_secant) r.passed = false;
    }
    return r;
}

ParamRnc apply_transform(const ProjTransform& t, const ParamRnc& c) {
    if (t.n() != c.n()) throw DimensionMismatch("transform and curve dimensions differ");
    std::vector<BinaryForm> out;
    const Matrix& a = t.matrix();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BinaryForm f(c.n());
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) f += c.forms()[j] * a(i, j);
        out.push_back(std::move(f));
    }
    return ParamRnc(std::move(out));
}

DetRnc apply_transform(const ProjTransform& t, const DetRnc& c) {
    LinFormGrid g;
    for (std::size_t j = 0; j < static_cast<std::size_t>(c.n()); ++j) {
        g.top.push_back(apply_transform(t, c.top(j)));
        g.bottom.push_back(apply_transform(t, c.bottom(j)));
    }
    return DetRnc(std::move(g));
}

}  // namespace rnckit
