#include "rnckit/construct.hpp"

#include "rnckit/errors.hpp"
#include "rnckit/sampling.hpp"

namespace rnckit {

std::string to_string(CountVerdict v) {
    switch (v) {
        case CountVerdict::overdetermined: return "overdetermined";
        case CountVerdict::finite_expected: return "finite_expected";
        case CountVerdict::positive_dimensional: return "positive_dimensional";
    }
    return "?";
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::exists_unique: return "exists_unique";
        case Classification::exists_nonunique: return "exists_nonunique";
        case Classification::not_exists: return "not_exists";
        case Classification::open: return "open";
        case Classification::trivial: return "trivial";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::frame_fit: return "frame_fit";
        case Method::cremona: return "cremona";
        case Method::one_space: return "one_space";
        case Method::three_points: return "three_points";
        case Method::two_points: return "two_points";
        case Method::one_point: return "one_point";
    }
    return "?";
}

std::string to_string(ExistenceCase c) {
    switch (c) {
        case ExistenceCase::through_points: return "through_points";
        case ExistenceCase::one_space: return "one_space";
        case ExistenceCase::three_points: return "three_points";
        case ExistenceCase::two_points: return "two_points";
        case ExistenceCase::one_point: return "one_point";
    }
    return "?";
}

std::pair<int, int> case_shape(ExistenceCase c, int n) {
    switch (c) {
        case ExistenceCase::through_points: return {n + 3, 0};
        case ExistenceCase::one_space: return {n + 2, 1};
        case ExistenceCase::three_points: return {3, n};
        case ExistenceCase::two_points: return {2, n + 1};
        case ExistenceCase::one_point: return {1, n + 2};
    }
    return {0, 0};
}

CountAnalysis expected_count(int n, int p, int l) {
    if (n < 3) throw BadDimension("expected_count needs n >= 3");
    if (p < 0 || l < 0) throw Error("point and space counts must be nonnegative");
    CountAnalysis a;
    a.n = n;
    a.p = p;
    a.l = l;
    a.dim_h = static_cast<long>(n - 1) * (n + 3);
    a.conditions = static_cast<long>(p + l) * (n - 1);
    a.verdict = a.conditions > a.dim_h    ? CountVerdict::overdetermined
                : a.conditions == a.dim_h ? CountVerdict::finite_expected
                                          : CountVerdict::positive_dimensional;
    if (p + l != n + 3) {
        a.classification = Classification::trivial;
    } else if (p == 0) {
        if (n == 3) {
            a.classification = Classification::exists_nonunique;
            a.count = 6;
        } else {
            a.classification = Classification::open;
        }
    } else if (p >= 4 && l >= 2) {
        a.classification = Classification::not_exists;
        a.count = 0;
    } else {
        a.classification = Classification::exists_unique;
        a.count = 1;
    }
    return a;
}

namespace {

void require_dims(int n, const std::vector<ProjPoint>& points, const std::vector<Pencil>& spaces) {
    for (const auto& p : points)
        if (p.n() != n) throw DimensionMismatch("point lives in the wrong space");
    for (const auto& s : spaces)
        if (s.n() != n) throw DimensionMismatch("space lives in the wrong space");
}

LinForm anchored_member(const Pencil& lam, const ProjPoint& p, long space_index, long point_index,
                        const std::string& stage) {
    LinForm h = lam.member_through(p);
    if (h.is_zero()) throw NotGeneric(stage, "a point lies on a space", {point_index, space_index});
    return h;
}

// Witness lists failing points by index, then failing spaces offset by p.
ExistenceCertificate certify(Datum datum, ParamRnc curve, DetRnc det, Method method) {
    auto report = verify_datum(curve, datum);
    if (!report.passed) {
        std::vector<long> witness;
        for (std::size_t i = 0; i < report.point_params.size(); ++i)
            if (!report.point_params[i]) witness.push_back(static_cast<long>(i));
        for (std::size_t j = 0; j < report.spaces.size(); ++j)
            if (!report.spaces[j].is_n_minus_1_secant)
                witness.push_back(static_cast<long>(report.point_params.size() + j));
        throw NotGeneric("verify", "constructed curve does not satisfy the datum", std::move(witness));
    }
    return {std::move(datum), std::move(curve), std::move(det), std::move(report), method};
}

ExistenceCertificate certify(Datum datum, DetRnc det, Method method) {
    ParamRnc curve = det.param();
    return certify(std::move(datum), std::move(curve), std::move(det), method);
}

// Kernel of k -> sum k_i forms[i] modulo span(lam): the sum lies in the span
// iff it vanishes on the points spanning the space.
std::vector<Vector> combinations_into(const std::vector<LinForm>& forms, const Pencil& lam) {
    Matrix cond(0, forms.size());
    for (const auto& x : lam.spanning_points()) {
        Vector row;
        for (const auto& f : forms) row.push_back(f(x));
        cond.append_row(row);
    }
    return nullspace(cond);
}

std::vector<long> iota_except(int upto, std::initializer_list<int> skip) {
    std::vector<long> out;
    for (int k = 0; k <= upto; ++k) {
        bool skipped = false;
        for (int s : skip) skipped = skipped || s == k;
        if (!skipped) out.push_back(k);
    }
    return out;
}

}  // namespace

bool verify_certificate(const ExistenceCertificate& cert) {
    return verify_datum(cert.curve, cert.datum).passed && curve_equals(cert.det, cert.curve);
}

ExistenceCertificate construct_through_points(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw DimensionMismatch("no points given");
    const int n = points.front().n();
    if (static_cast<int>(points.size()) != n + 3) throw DimensionMismatch("need exactly n+3 points");
    require_dims(n, points, {});
    const ProjTransform t = frame_map({points.begin(), points.begin() + n + 2});
    const Vector q = t.matrix().apply(points[static_cast<std::size_t>(n) + 2].coords());
    for (int i = 0; i <= n; ++i)
        if (is_zero(q[static_cast<std::size_t>(i)])) {
            auto w = iota_except(n, {i});
            w.push_back(n + 2);
            throw NotGeneric("frame_fit", "last point lies on a hyperplane of the frame", std::move(w));
        }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (q[static_cast<std::size_t>(i)] == q[static_cast<std::size_t>(j)]) {
                auto w = iota_except(n, {i, j});
                w.push_back(n + 1);
                w.push_back(n + 2);
                throw NotGeneric("frame_fit", "last point has two equal frame coordinates", std::move(w));
            }
    // In frame coordinates the curve is x_i = q_i / (q_i t + 1).
    std::vector<BinaryForm> phi;
    for (int i = 0; i <= n; ++i) {
        BinaryForm f = BinaryForm::constant(q[static_cast<std::size_t>(i)]);
        for (int j = 0; j <= n; ++j)
            if (j != i) f = f * BinaryForm::linear(q[static_cast<std::size_t>(j)], 1);
        phi.push_back(std::move(f));
    }
    ParamRnc curve = apply_transform(t.inverse(), ParamRnc(std::move(phi)));
    DetRnc det = param_to_det(curve);
    return certify(Datum(n, {}, points), std::move(curve), std::move(det), Method::frame_fit);
}

ProjPoint cremona_apply(const ProjPoint& x) {
    const auto& c = x.coords();
    Vector y(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Scalar prod = 1;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i) prod *= c[j];
        y[i] = prod;
    }
    if (is_zero(y)) throw FundamentalLocus("point lies in the indeterminacy locus");
    return ProjPoint(std::move(y));
}

ParamRnc cremona_pullback_line(const ProjPoint& a, const ProjPoint& b) {
    if (a.n() != b.n()) throw DimensionMismatch("points live in different spaces");
    if (a == b) throw FundamentalLocus("the two points coincide");
    // The line (u - s) a + s b.
    std::vector<BinaryForm> line;
    for (std::size_t i = 0; i < a.coords().size(); ++i) line.push_back(BinaryForm::linear(b[i] - a[i], a[i]));
    std::vector<BinaryForm> image;
    for (std::size_t i = 0; i < line.size(); ++i) {
        BinaryForm f = BinaryForm::constant(1);
        for (std::size_t j = 0; j < line.size(); ++j)
            if (j != i) f = f * line[j];
        image.push_back(std::move(f));
    }
    std::optional<BinaryForm> common;
    for (const auto& f : image) {
        if (f.is_zero()) continue;
        common = common ? binary_gcd(*common, f) : f.monic();
    }
    if (!common) throw FundamentalLocus("the line lies in the indeterminacy locus");
    for (auto& f : image) f = exact_divide(f, *common);
    if (common->degree() != 0) throw FundamentalLocus("the line meets the indeterminacy locus");
    try {
        return ParamRnc(std::move(image));
    } catch (const NotGeneric&) {
        throw FundamentalLocus("the image of the line is degenerate");
    }
}

ExistenceCertificate construct_through_points_cremona(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw DimensionMismatch("no points given");
    const int n = points.front().n();
    if (static_cast<int>(points.size()) != n + 3) throw DimensionMismatch("need exactly n+3 points");
    require_dims(n, points, {});
    const ProjTransform t = frame_map({points.begin(), points.begin() + n + 2});
    const ProjPoint a = cremona_apply(apply_transform(t, points[static_cast<std::size_t>(n) + 1]));
    const ProjPoint b = cremona_apply(apply_transform(t, points[static_cast<std::size_t>(n) + 2]));
    ParamRnc curve = apply_transform(t.inverse(), cremona_pullback_line(a, b));
    DetRnc det = param_to_det(curve);
    return certify(Datum(n, {}, points), std::move(curve), std::move(det), Method::cremona);
}

ExistenceCertificate construct_np2_one_space(const std::vector<ProjPoint>& points, const Pencil& lam) {
    const int n = lam.n();
    if (static_cast<int>(points.size()) != n + 2) throw DimensionMismatch("need exactly n+2 points");
    require_dims(n, points, {});
    for (std::size_t i = 0; i < points.size(); ++i)
        if (lam.contains_point(points[i])) throw NotGeneric("incidence", "a point lies on the space", {static_cast<long>(i)});

    // Quadrics f A + g B through the points, as pairs (A, B).
    const auto nv = static_cast<std::size_t>(n) + 1;
    Matrix cond(0, 2 * nv);
    for (const auto& p : points) {
        const Scalar fp = lam.f()(p), gp = lam.g()(p);
        Vector row(2 * nv);
        for (std::size_t k = 0; k < nv; ++k) {
            row[k] = fp * p[k];
            row[nv + k] = gp * p[k];
        }
        cond.append_row(row);
    }
    const auto kernel = nullspace(cond);
    // (g, -f) gives the zero quadric, so n pairs leave n-1 quadrics.
    if (kernel.size() != static_cast<std::size_t>(n))
        throw NotGeneric("quadric_space", "quadrics through the space and the points have the wrong dimension",
                         {static_cast<long>(kernel.size()) - 1});
    Vector trivial(2 * nv);
    for (std::size_t k = 0; k < nv; ++k) {
        trivial[k] = lam.g().coeffs()[k];
        trivial[nv + k] = -lam.f().coeffs()[k];
    }
    std::vector<Vector> chosen{trivial};
    LinFormGrid grid{{lam.f()}, {lam.g()}};
    for (const auto& v : kernel) {
        if (chosen.size() == static_cast<std::size_t>(n)) break;
        chosen.push_back(v);
        if (ff_rank(Matrix::from_rows(chosen)) != chosen.size()) {
            chosen.pop_back();
            continue;
        }
        const Vector a(v.begin(), v.begin() + static_cast<long>(nv)), b(v.begin() + static_cast<long>(nv), v.end());
        grid.top.push_back(LinForm(b) * Scalar(-1));
        grid.bottom.emplace_back(a);
    }
    if (chosen.size() != static_cast<std::size_t>(n))
        throw NotGeneric("quadric_space", "quadric decomposition degenerates");
    return certify(Datum(n, {lam}, points), DetRnc(std::move(grid)), Method::one_space);
}

ExistenceCertificate construct_three_points(const std::vector<ProjPoint>& points, const std::vector<Pencil>& spaces) {
    if (points.size() != 3) throw DimensionMismatch("need exactly three points");
    const int n = points.front().n();
    if (static_cast<int>(spaces.size()) != n) throw DimensionMismatch("need exactly n spaces");
    require_dims(n, points, spaces);
    LinFormGrid grid;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const auto si = static_cast<long>(i);
        LinForm h1 = anchored_member(spaces[i], points[0], si, 0, "three_points");
        LinForm h2 = anchored_member(spaces[i], points[1], si, 1, "three_points");
        const Scalar num = h1(points[2]), den = h2(points[2]);
        if (is_zero(num) || is_zero(den))
            throw NotGeneric("three_points", "the third point lies on an anchored member", {2, si});
        grid.top.push_back(std::move(h1));
        grid.bottom.push_back(h2 * (num / den));
    }
    return certify(Datum(n, spaces, points), DetRnc(std::move(grid)), Method::three_points);
}

ExistenceCertificate construct_two_points(const std::vector<ProjPoint>& points, const std::vector<Pencil>& spaces) {
    if (points.size() != 2) throw DimensionMismatch("need exactly two points");
    const int n = points.front().n();
    if (static_cast<int>(spaces.size()) != n + 1) throw DimensionMismatch("need exactly n+1 spaces");
    require_dims(n, points, spaces);
    std::vector<LinForm> h1, h2;
    for (int i = 0; i < n; ++i) {
        h1.push_back(anchored_member(spaces[static_cast<std::size_t>(i)], points[0], i, 0, "two_points"));
        h2.push_back(anchored_member(spaces[static_cast<std::size_t>(i)], points[1], i, 1, "two_points"));
    }
    const Pencil& last = spaces.back();
    const auto k = combinations_into(h1, last);
    if (k.size() != 1)
        throw NotGeneric("two_points", "first-row combinations into the last space are not unique",
                         {static_cast<long>(k.size())});
    const auto m = combinations_into(h2, last);
    if (m.size() != 1)
        throw NotGeneric("two_points", "second-row combinations into the last space are not unique",
                         {static_cast<long>(m.size())});
    LinFormGrid grid;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        if (is_zero(k[0][i]) || is_zero(m[0][i]))
            throw NotGeneric("two_points", "a column drops out of the last space's combination", {static_cast<long>(i)});
        grid.top.push_back(h1[i]);
        grid.bottom.push_back(h2[i] * (m[0][i] / k[0][i]));
    }
    return certify(Datum(n, spaces, points), DetRnc(std::move(grid)), Method::two_points);
}

ExistenceCertificate construct_one_point(const ProjPoint& point, const std::vector<Pencil>& spaces) {
    const int n = point.n();
    if (static_cast<int>(spaces.size()) != n + 2) throw DimensionMismatch("need exactly n+2 spaces");
    require_dims(n, {point}, spaces);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<LinForm> h;
    for (int i = 0; i < n; ++i) h.push_back(anchored_member(spaces[static_cast<std::size_t>(i)], point, i, 0, "one_point"));

    // Unknowns (gamma_0..gamma_{n-1}, delta_0..delta_{n-1}); bottom i = gamma_i f_i + delta_i g_i.
    Matrix cond(0, 2 * nn);
    for (std::size_t extra = nn; extra < nn + 2; ++extra) {
        const Pencil& lam = spaces[extra];
        const auto e = combinations_into(h, lam);
        if (e.size() != 1)
            throw NotGeneric("one_point", "first-row combination into an extra space is not unique",
                             {static_cast<long>(extra), static_cast<long>(e.size())});
        for (const auto& x : lam.spanning_points()) {
            Vector row(2 * nn);
            for (std::size_t i = 0; i < nn; ++i) {
                row[i] = e[0][i] * spaces[i].f()(x);
                row[nn + i] = e[0][i] * spaces[i].g()(x);
            }
            cond.append_row(row);
        }
    }
    const auto sol = nullspace(cond);
    if (sol.size() != 2)
        throw NotGeneric("one_point", "second-row solution space does not have dimension 2",
                         {static_cast<long>(sol.size())});
    // Row-one direction: H_i = g_i(P) f_i - f_i(P) g_i.
    Vector row1(2 * nn);
    for (std::size_t i = 0; i < nn; ++i) {
        row1[i] = spaces[i].g()(point);
        row1[nn + i] = -spaces[i].f()(point);
    }
    const Vector* pick = nullptr;
    for (const auto& v : sol)
        if (ff_rank(Matrix::from_rows({row1, v})) == 2) {
            pick = &v;
            break;
        }
    if (!pick) throw NotGeneric("one_point", "every solution is proportional to the first row");
    LinFormGrid grid;
    for (std::size_t i = 0; i < nn; ++i) {
        grid.top.push_back(h[i]);
        grid.bottom.push_back(spaces[i].f() * (*pick)[i] + spaces[i].g() * (*pick)[nn + i]);
    }
    return certify(Datum(n, spaces, {point}), DetRnc(std::move(grid)), Method::one_point);
}

ConstructResult construct(const Datum& d) {
    const int n = d.n, p = d.p(), l = d.l();
    if (p + l != n + 3) {
        const CountAnalysis a = expected_count(n, p, l);
        throw BadShape("p + l = " + std::to_string(p + l) + " but n + 3 = " + std::to_string(n + 3) +
                       "; the count is " + to_string(a.verdict));
    }
    if (p == 0) return UnsupportedResult{"no constructor for n+3 spaces and no points; the case is open"};
    if (p >= 4 && l >= 2) return nonexistence_certificate(d);
    if (l == 0) return construct_through_points(d.points);
    if (l == 1) return construct_np2_one_space(d.points, d.spaces[0]);
    if (p == 3) return construct_three_points(d.points, d.spaces);
    if (p == 2) return construct_two_points(d.points, d.spaces);
    return construct_one_point(d.points[0], d.spaces);
}

namespace {

ProjPoint common_zero(const std::vector<LinForm>& forms) {
    std::vector<Vector> rows;
    for (const auto& f : forms) rows.push_back(f.coeffs());
    auto k = nullspace(Matrix::from_rows(rows));
    if (k.size() != 1) throw DegenerateSpan("forms do not cut out a single point");
    return ProjPoint(std::move(k[0]));
}

ProjPoint row_point(const LinFormGrid& m, const Scalar& a, const Scalar& b) {
    std::vector<LinForm> forms;
    for (std::size_t i = 0; i < m.top.size(); ++i) forms.push_back(m.top[i] * a + m.bottom[i] * b);
    return common_zero(forms);
}

Pencil column_sum(const LinFormGrid& m, std::initializer_list<std::pair<std::size_t, std::size_t>> ranges) {
    const std::size_t nv = m.top.front().coeffs().size();
    LinForm f{Vector(nv)}, g{Vector(nv)};
    for (auto [lo, hi] : ranges)
        for (std::size_t i = lo; i <= hi; ++i) {
            f += m.top[i];
            g += m.bottom[i];
        }
    return Pencil(std::move(f), std::move(g));
}

Datum special_from(const LinFormGrid& m, ExistenceCase c, int n, Rng& rng) {
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Pencil> columns;
    for (std::size_t i = 0; i < nn; ++i) columns.emplace_back(m.top[i], m.bottom[i]);
    // On the curve the columns read (s : u), so {u F - s G = 0} is the point at (s : u).
    auto curve_points = [&](int count) {
        std::vector<ProjPoint> pts;
        for (const auto& t : random_params(count, rng)) pts.push_back(row_point(m, t.u, -t.s));
        return pts;
    };
    switch (c) {
        case ExistenceCase::through_points: return Datum(n, {}, curve_points(n + 3));
        case ExistenceCase::one_space: return Datum(n, {columns[0]}, curve_points(n + 2));
        case ExistenceCase::three_points:
            return Datum(n, columns, {row_point(m, 1, 0), row_point(m, 0, 1), row_point(m, 1, 1)});
        case ExistenceCase::two_points: {
            auto spaces = columns;
            spaces.push_back(column_sum(m, {{0, nn - 1}}));
            return Datum(n, std::move(spaces), {row_point(m, 1, 0), row_point(m, 0, 1)});
        }
        case ExistenceCase::one_point: {
            auto spaces = columns;
            if (n % 2 == 1) {
                const std::size_t mid = (nn + 1) / 2;  // n = 2 mid - 1
                spaces.push_back(column_sum(m, {{0, mid - 1}}));
                spaces.push_back(column_sum(m, {{mid - 1, nn - 1}}));
            } else {
                const std::size_t mid = (nn + 2) / 2;  // n = 2 mid - 2
                spaces.push_back(column_sum(m, {{0, mid - 1}}));
                spaces.push_back(column_sum(m, {{0, 0}, {mid - 1, nn - 1}}));
            }
            return Datum(n, std::move(spaces), {row_point(m, 1, 0)});
        }
    }
    throw Error("unknown case");
}

}  // namespace

SpecialDatum special_datum(int n, ExistenceCase c, std::uint64_t seed) {
    if (n < 3) throw BadDimension("special data need n >= 3");
    Rng rng(seed);
    const auto nn = static_cast<std::size_t>(n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        LinFormGrid m;
        for (std::size_t j = 0; j < nn; ++j) {
            m.top.emplace_back(random_vector(n + 1, rng, 5));
            m.bottom.emplace_back(random_vector(n + 1, rng, 5));
        }
        if (c == ExistenceCase::one_point && n % 2 == 0) {
            // Even n = 2 mid - 2: G_1 = F_1 + ... + F_mid + G_2 + ... + G_mid.
            const std::size_t mid = (nn + 2) / 2;
            LinForm g(Vector(nn + 1));
            for (std::size_t i = 0; i < mid; ++i) g += m.top[i];
            for (std::size_t i = 1; i < mid; ++i) g += m.bottom[i];
            m.bottom[0] = std::move(g);
        }
        try {
            DetRnc det(m);
            Datum d = special_from(m, c, n, rng);
            if (!verify_datum(det.param(), d).passed) continue;
            return {std::move(d), std::move(det)};
        } catch (const Error&) {
            continue;
        }
    }
    throw NotGeneric("special_datum", "no generic matrix found within the retry budget");
}

}  // namespace rnckit
