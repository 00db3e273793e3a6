#include "rnckit/datum.hpp"

#include "rnckit/errors.hpp"

namespace rnckit {

Datum::Datum(int n_, std::vector<Pencil> spaces_, std::vector<ProjPoint> points_)
    : n(n_), spaces(std::move(spaces_)), points(std::move(points_)) {
    for (const auto& s : spaces)
        if (s.n() != n) throw DimensionMismatch("datum space lives in the wrong P^n");
    for (const auto& p : points)
        if (p.n() != n) throw DimensionMismatch("datum point lives in the wrong P^n");
}

Datum apply_transform(const ProjTransform& t, const Datum& d) {
    if (t.n() != d.n) throw DimensionMismatch("transform and datum dimensions differ");
    Datum out;
    out.n = d.n;
    for (const auto& s : d.spaces) out.spaces.push_back(apply_transform(t, s));
    for (const auto& p : d.points) out.points.push_back(apply_transform(t, p));
    return out;
}

}  // namespace rnckit
