#include "rnckit/sampling.hpp"

#include <algorithm>

#include "rnckit/errors.hpp"

namespace rnckit {

long Rng::integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

long Rng::nonzero(long bound) {
    long v = integer(1, bound);
    return (engine_() & 1U) ? v : -v;
}

Vector random_vector(int size, Rng& rng, long bound) {
    Vector v(static_cast<std::size_t>(size));
    for (auto& x : v) x = rng.integer(-bound, bound);
    return v;
}

ProjPoint random_point(int n, Rng& rng, long bound) {
    for (;;) {
        Vector v = random_vector(n + 1, rng, bound);
        if (!is_zero(v)) return ProjPoint(std::move(v));
    }
}

Pencil random_pencil(int n, Rng& rng, long bound) {
    for (;;) {
        LinForm f(random_vector(n + 1, rng, bound));
        LinForm g(random_vector(n + 1, rng, bound));
        if (ff_rank(Matrix::from_rows({f.coeffs(), g.coeffs()})) == 2) return Pencil(std::move(f), std::move(g));
    }
}

ProjTransform random_transform(int n, Rng& rng, long bound) {
    for (;;) {
        Matrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rng.integer(-bound, bound);
        if (!is_zero(determinant(m))) return ProjTransform(std::move(m));
    }
}

ParamRnc random_curve(int n, Rng& rng, long bound) {
    return apply_transform(random_transform(n, rng, bound), ParamRnc::moment(n));
}

std::vector<Param> random_params(int count, Rng& rng, long bound) {
    if (count > 2 * bound + 2) throw Error("parameter range too small for the requested count");
    std::vector<Param> out;
    while (static_cast<int>(out.size()) < count) {
        long v = rng.integer(-bound, bound + 1);
        Param t = v == bound + 1 ? Param::infinity() : Param::affine(v);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

Datum forward_datum(const ParamRnc& curve, int p, int l, Rng& rng, std::vector<Param>* params, long bound) {
    const int n = curve.n();
    const int total = p + l * (n - 1);
    std::vector<Param> ts = random_params(total, rng, std::max<long>(bound, total));
    Datum d;
    d.n = n;
    std::size_t next = 0;
    for (int i = 0; i < p; ++i) d.points.push_back(point_at(curve, ts[next++]));
    for (int i = 0; i < l; ++i) {
        std::vector<Param> chord(ts.begin() + static_cast<long>(next), ts.begin() + static_cast<long>(next) + n - 1);
        next += static_cast<std::size_t>(n - 1);
        d.spaces.push_back(chord_space(curve, chord));
    }
    if (params) *params = std::move(ts);
    return d;
}

Datum random_datum(int n, int p, int l, Rng& rng, long bound) {
    Datum d;
    d.n = n;
    for (int i = 0; i < p; ++i) d.points.push_back(random_point(n, rng, bound));
    for (int i = 0; i < l; ++i) d.spaces.push_back(random_pencil(n, rng, bound));
    return d;
}

}  // namespace rnckit
