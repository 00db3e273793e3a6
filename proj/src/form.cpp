#include "rnckit/form.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "rnckit/errors.hpp"

namespace rnckit {

namespace {

void enumerate(int var, int nvars, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (var == nvars - 1) {
        cur[static_cast<std::size_t>(var)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        enumerate(var + 1, nvars, remaining - e, cur, out);
    }
}

std::size_t code_of(const std::vector<int>& e, int degree) {
    std::size_t code = 0;
    for (auto it = e.rbegin(); it != e.rend(); ++it) code = code * static_cast<std::size_t>(degree + 1) + static_cast<std::size_t>(*it);
    return code;
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1 || degree < 0) throw Error("bad monomial basis shape");
    std::vector<int> cur(static_cast<std::size_t>(nvars));
    enumerate(0, nvars, degree, cur, exps_);
    std::size_t table = 1;
    for (int i = 0; i < nvars; ++i) table *= static_cast<std::size_t>(degree + 1);
    lookup_.assign(table, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < exps_.size(); ++i) lookup_[code_of(exps_[i], degree)] = i;
}

std::size_t MonomialBasis::index_of(const std::vector<int>& e) const {
    return lookup_[code_of(e, degree_)];
}

const MonomialBasis& monomial_basis(int nvars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{nvars, degree}];
    if (!slot) slot = std::make_unique<MonomialBasis>(nvars, degree);
    return *slot;
}

Form::Form(int nvars, int degree) : basis_(&monomial_basis(nvars, degree)), coeffs_(basis_->size()) {}

Form::Form(int nvars, int degree, Vector coeffs) : basis_(&monomial_basis(nvars, degree)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_->size()) throw DimensionMismatch("coefficient count does not match monomial basis");
}

Form Form::linear(const Vector& coeffs) {
    // Degree-1 basis order is x0, x1, ..., so coefficients map directly.
    return Form(static_cast<int>(coeffs.size()), 1, coeffs);
}

Scalar Form::evaluate(const Vector& x) const {
    if (static_cast<int>(x.size()) != nvars()) throw DimensionMismatch("evaluation point has wrong length");
    const int d = degree();
    std::vector<Vector> pw(x.size(), Vector(static_cast<std::size_t>(d) + 1));
    for (std::size_t i = 0; i < x.size(); ++i) {
        pw[i][0] = 1;
        for (int k = 1; k <= d; ++k) pw[i][static_cast<std::size_t>(k)] = pw[i][static_cast<std::size_t>(k - 1)] * x[i];
    }
    Scalar acc = 0;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (rnckit::is_zero(coeffs_[m])) continue;
        Scalar term = coeffs_[m];
        const auto& e = basis_->exponents(m);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= pw[i][static_cast<std::size_t>(e[i])];
        acc += term;
    }
    return acc;
}

Form Form::substitute(const Matrix& subst) const {
    if (static_cast<int>(subst.rows()) != nvars()) throw DimensionMismatch("substitution has wrong row count");
    const int m = static_cast<int>(subst.cols());
    const int d = degree();
    std::vector<std::vector<Form>> pw;
    for (std::size_t i = 0; i < subst.rows(); ++i) {
        std::vector<Form> p{Form(m, 0, Vector{Scalar(1)})};
        Form li = Form::linear(subst.row_vector(i));
        for (int k = 1; k <= d; ++k) p.push_back(p.back() * li);
        pw.push_back(std::move(p));
    }
    Form out(m, d);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (rnckit::is_zero(coeffs_[idx])) continue;
        const auto& e = basis_->exponents(idx);
        Form term(m, 0, Vector{coeffs_[idx]});
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * pw[i][static_cast<std::size_t>(e[i])];
        out += term;
    }
    return out;
}

BinaryForm Form::compose(const std::vector<BinaryForm>& phi) const {
    if (static_cast<int>(phi.size()) != nvars()) throw DimensionMismatch("composition needs one form per variable");
    const int d = degree();
    const int k = phi.front().degree();
    std::vector<std::vector<BinaryForm>> pw;
    for (const auto& f : phi) {
        if (f.degree() != k) throw DimensionMismatch("composition forms differ in degree");
        std::vector<BinaryForm> p{BinaryForm::constant(1)};
        for (int j = 1; j <= d; ++j) p.push_back(p.back() * f);
        pw.push_back(std::move(p));
    }
    BinaryForm out(d * k);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (rnckit::is_zero(coeffs_[idx])) continue;
        const auto& e = basis_->exponents(idx);
        BinaryForm term = BinaryForm::constant(coeffs_[idx]);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * pw[i][static_cast<std::size_t>(e[i])];
        out += term;
    }
    return out;
}

Form& Form::operator+=(const Form& o) {
    if (o.basis_ != basis_) throw DimensionMismatch("adding forms over different bases");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (o.basis_ != basis_) throw DimensionMismatch("subtracting forms over different bases");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Form& Form::operator*=(const Scalar& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

Form operator*(const Form& a, const Form& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("multiplying forms in different variables");
    Form out(a.nvars(), a.degree() + b.degree());
    std::vector<int> e(static_cast<std::size_t>(a.nvars()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        const auto& ea = a.basis_->exponents(i);
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (is_zero(b.coeffs_[j])) continue;
            const auto& eb = b.basis_->exponents(j);
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.coeffs_[out.basis_->index_of(e)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

std::string Form::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        Scalar c = coeffs_[m];
        if (rnckit::is_zero(c)) continue;
        std::string mono;
        const auto& e = basis_->exponents(m);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
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

}  // namespace rnckit
