#pragma once

#include <vector>

#include "rnckit/curve.hpp"
#include "rnckit/datum.hpp"

namespace rnckit {

/// Projective invariants of an ordered datum read on its interpolating curve,
/// normalized so the first three points sit at 0, 1 and infinity.
struct Signature {
    std::vector<Param> point_params;
    /// Monic D-forms of the spaces, carried along by the same normalization.
    std::vector<BinaryForm> space_forms;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Möbius map (as a 2x2 matrix acting on (s, u)) sending a, b, c to 0, 1, inf.
Matrix normalizing_mobius(const Param& a, const Param& b, const Param& c);

/// Signature read on a given curve that satisfies the datum.
/// Throws NotGeneric if the curve does not satisfy it.
Signature signature_on(const ParamRnc& curve, const Datum& datum);

/// Builds the unique curve and reads the signature. Throws Unsupported when
/// p < 3 or when no curve exists, NotGeneric when construction fails.
Signature signature(const Datum& datum);

/// Ordered projective equivalence. Data of different shapes are never equivalent.
bool are_equivalent(const Datum& a, const Datum& b);

}  // namespace rnckit
