#pragma once

#include <array>

#include "rnckit/datum.hpp"
#include "rnckit/form.hpp"

namespace rnckit {

/// Bezout bookkeeping for a curve forced onto the quadric: it meets the
/// quadric in at least 3 + (n-1-t) + (n-1-t) + 2t = 2n+1 points, more than the
/// 2n a quadric section of a degree-n curve allows.
struct DegreeLedger {
    long intersection_lower_bound = 0;
    long bezout_bound = 0;

    friend bool operator==(const DegreeLedger&, const DegreeLedger&) = default;
};

struct ObstructionCertificate {
    Datum datum;
    Form quadric{1, 2};
    /// Containment of the first two spaces and the first three points.
    std::array<bool, 5> contains{};
    ProjPoint excluded_point{Vector{1}};
    Scalar excluded_value;
    DegreeLedger ledger;

    friend bool operator==(const ObstructionCertificate&, const ObstructionCertificate&) = default;
};

/// Nonzero quadric through both spaces and the three points, normalized so its
/// last nonzero coefficient is 1. Throws NotGeneric unless exactly one quadric
/// (up to scale) exists.
Form obstruction_quadric(const Pencil& l1, const Pencil& l2, const ProjPoint& p1, const ProjPoint& p2,
                         const ProjPoint& p3);

/// True iff q lies in the degree-2 part of the ideal (f, g) of the space.
bool quadric_contains(const Form& q, const Pencil& lam);

DegreeLedger degree_ledger(int n);

/// Certificate that no rational normal curve satisfies a datum with p >= 4 and
/// l >= 2. Uses the first two spaces and the first four points.
/// Throws BadShape, NotGeneric, or ObstructionFails when Q(P4) = 0.
ObstructionCertificate nonexistence_certificate(const Datum& datum);

/// Re-checks every claim of a certificate from scratch.
bool verify_certificate(const ObstructionCertificate& cert);

}  // namespace rnckit
