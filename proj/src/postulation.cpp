#include "rnckit/postulation.hpp"

#include <algorithm>

#include "rnckit/construct.hpp"
#include "rnckit/errors.hpp"
#include "rnckit/sampling.hpp"

namespace rnckit {

long binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void append_point_rows(Matrix& rows, const MonomialBasis& basis, const ProjPoint& p) {
    const auto& x = p.coords();
    for (std::size_t k = 0; k < x.size(); ++k) {
        Vector row(basis.size());
        for (std::size_t m = 0; m < basis.size(); ++m) {
            auto e = basis.exponents(m);
            if (e[k] == 0) continue;
            Scalar v = e[k];
            --e[k];
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) v *= x[i];
            row[m] = v;
        }
        rows.append_row(row);
    }
}

// Invertible A with rows f, g and unit vectors, so y = A x has y0 = f, y1 = g.
Matrix adapted_coordinates(const Pencil& lam) {
    const auto nv = static_cast<std::size_t>(lam.n()) + 1;
    std::vector<Vector> rows{lam.f().coeffs(), lam.g().coeffs()};
    for (std::size_t k = 0; k < nv && rows.size() < nv; ++k) {
        Vector e(nv);
        e[k] = 1;
        rows.push_back(e);
        if (ff_rank(Matrix::from_rows(rows)) != rows.size()) rows.pop_back();
    }
    return Matrix::from_rows(rows);
}

void append_space_rows(Matrix& rows, const MonomialBasis& basis, const Pencil& lam) {
    const int nv = basis.nvars(), d = basis.degree();
    const Matrix a_inv = *inverse(adapted_coordinates(lam));
    // x_i = (A^{-1} y)_i; powers of these linear forms in y.
    std::vector<std::vector<Form>> pw;
    for (int i = 0; i < nv; ++i) {
        std::vector<Form> p{Form(nv, 0, Vector{Scalar(1)})};
        const Form li = Form::linear(a_inv.row_vector(static_cast<std::size_t>(i)));
        for (int k = 1; k <= d; ++k) p.push_back(p.back() * li);
        pw.push_back(std::move(p));
    }
    std::vector<std::size_t> selected;
    for (std::size_t m = 0; m < basis.size(); ++m)
        if (basis.exponents(m)[0] + basis.exponents(m)[1] <= 1) selected.push_back(m);
    Matrix block(selected.size(), basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const auto& e = basis.exponents(m);
        Form image(nv, 0, Vector{Scalar(1)});
        for (int i = 0; i < nv; ++i)
            if (e[static_cast<std::size_t>(i)])
                image = image * pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
        for (std::size_t r = 0; r < selected.size(); ++r) block(r, m) = image.coeffs()[selected[r]];
    }
    for (std::size_t r = 0; r < block.rows(); ++r) rows.append_row(block.row(r));
}

bool lemma_shape_matches(const SchemeSpec& s) {
    return s.degree == 4 && static_cast<int>(s.double_points.size()) == s.n + 2 && s.double_spaces.size() == 1;
}

bool seven_points_shape(const SchemeSpec& s) {
    return s.n == 4 && s.degree == 3 && s.double_points.size() == 7 && s.double_spaces.empty();
}

void check_spec(const SchemeSpec& s) {
    if (s.degree < 1) throw Error("degree must be at least 1");
    if (s.n < 1) throw BadDimension("ambient dimension must be at least 1");
    for (const auto& p : s.double_points)
        if (p.n() != s.n) throw DimensionMismatch("point lives in the wrong space");
    for (const auto& l : s.double_spaces)
        if (l.n() != s.n) throw DimensionMismatch("space lives in the wrong space");
}

}  // namespace

Matrix conditions_rows(const SchemeSpec& spec) {
    check_spec(spec);
    const MonomialBasis& basis = monomial_basis(spec.n + 1, spec.degree);
    Matrix rows(0, basis.size());
    for (const auto& p : spec.double_points) append_point_rows(rows, basis, p);
    for (const auto& l : spec.double_spaces) append_space_rows(rows, basis, l);
    return rows;
}

PostulationReport hilbert_function(const SchemeSpec& spec) {
    const Matrix rows = conditions_rows(spec);
    const long n = spec.n, d = spec.degree;
    PostulationReport r;
    r.total_monomials = binomial(n + d, d);
    for (std::size_t i = 0; i < spec.double_points.size(); ++i) r.item_conditions.push_back(n + 1);
    for (std::size_t i = 0; i < spec.double_spaces.size(); ++i)
        r.item_conditions.push_back(binomial(d + n - 2, n - 2) + 2 * binomial(d + n - 3, n - 2));
    for (long c : r.item_conditions) r.conditions_sum += c;
    if (lemma_shape_matches(spec)) r.h_formula = (n + 2) * (n + 1) + binomial(n + 2, 4) + 2 * binomial(n + 1, 3);
    r.expected = std::min(r.total_monomials, r.conditions_sum);
    r.actual = static_cast<long>(ff_rank(rows));
    r.deficit = r.expected - r.actual;
    if (lemma_shape_matches(spec) && r.deficit >= 1)
        r.note = "P^1 x P^" + std::to_string(n) + " embedded by bidegree (2,2) is " + std::to_string(n + 1) +
                 "-defective";
    return r;
}

namespace {

Form secant_cubic(const ParamRnc& c) {
    // psi = C^{-1} x maps the curve to the moment curve, whose secant variety is
    // the 3x3 Hankel determinant.
    std::vector<Form> psi;
    for (std::size_t j = 0; j < 5; ++j) psi.push_back(Form::linear(c.inverse_coefficients().row_vector(j)));
    auto h = [&](std::size_t i, std::size_t j) -> const Form& { return psi[i + j]; };
    return h(0, 0) * (h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1)) - h(0, 1) * (h(1, 0) * h(2, 2) - h(1, 2) * h(2, 0)) +
           h(0, 2) * (h(1, 0) * h(2, 1) - h(1, 1) * h(2, 0));
}

}  // namespace

std::optional<DefectWitness> defect_explanation(const SchemeSpec& spec) {
    check_spec(spec);
    const long n = spec.n;
    if (lemma_shape_matches(spec)) {
        // One simple point, n+1 double points and a double (n-1)-secant space
        // meet the curve in degree 1 + 2(n+1) + 2(n-1) > 4n.
        auto cert = construct_np2_one_space(spec.double_points, spec.double_spaces[0]);
        return DefectWitness{cert.curve, 1 + 2 * (n + 1) + 2 * (n - 1), 4 * n, std::nullopt};
    }
    if (seven_points_shape(spec)) {
        // A cubic singular at seven points of a quartic curve meets it in degree >= 14 > 12.
        auto cert = construct_through_points(spec.double_points);
        Form cubic = secant_cubic(cert.curve);
        return DefectWitness{cert.curve, 2 * 7, 3 * n, std::move(cubic)};
    }
    return std::nullopt;
}

std::vector<ProjPoint> generic_points(int n, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ProjPoint> pts;
    while (static_cast<int>(pts.size()) < count) {
        pts.push_back(random_point(n, rng, 5));
        if (!dependent_subset(pts).empty() ||
            std::find(pts.begin(), pts.end() - 1, pts.back()) != pts.end() - 1)
            pts.pop_back();
    }
    return pts;
}

SchemeSpec lemma_shape(int n, std::uint64_t seed) {
    SchemeSpec s;
    s.n = n;
    s.degree = 4;
    s.double_points = generic_points(n, n + 2, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (;;) {
        Pencil lam = random_pencil(n, rng, 5);
        bool meets = false;
        for (const auto& p : s.double_points) meets = meets || lam.contains_point(p);
        if (!meets) {
            s.double_spaces.push_back(std::move(lam));
            return s;
        }
    }
}

std::vector<AhRow> ah_exceptions_suite(std::uint64_t seed) {
    struct Case {
        int n, p, d;
        bool exceptional;
    };
    const Case cases[] = {{2, 5, 4, true}, {3, 9, 4, true}, {4, 14, 4, true}, {4, 7, 3, true}, {2, 5, 3, false}};
    std::vector<AhRow> out;
    std::uint64_t k = 0;
    for (const auto& c : cases) {
        SchemeSpec s;
        s.n = c.n;
        s.degree = c.d;
        s.double_points = generic_points(c.n, c.p, seed + k++);
        out.push_back({c.n, c.p, c.d, c.exceptional, hilbert_function(s)});
    }
    return out;
}

}  // namespace rnckit
