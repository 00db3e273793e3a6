#pragma once

#include <vector>

#include "rnckit/projective.hpp"

namespace rnckit {

/// Ordered configuration of l codimension-two spaces and p points in P^n.
struct Datum {
    int n = 0;
    std::vector<Pencil> spaces;
    std::vector<ProjPoint> points;

    Datum() = default;
    /// Throws DimensionMismatch unless every item lives in P^n.
    Datum(int n, std::vector<Pencil> spaces, std::vector<ProjPoint> points);

    int p() const noexcept { return static_cast<int>(points.size()); }
    int l() const noexcept { return static_cast<int>(spaces.size()); }

    friend bool operator==(const Datum&, const Datum&) = default;
};

Datum apply_transform(const ProjTransform& t, const Datum& d);

}  // namespace rnckit
