#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rnckit/curve.hpp"
#include "rnckit/datum.hpp"
#include "rnckit/obstruction.hpp"

namespace rnckit {

enum class CountVerdict { overdetermined, finite_expected, positive_dimensional };

/// `trivial` marks shapes with p + l != n + 3, where no finiteness question arises.
enum class Classification { exists_unique, exists_nonunique, not_exists, open, trivial };

struct CountAnalysis {
    int n = 0;
    int p = 0;
    int l = 0;
    long dim_h = 0;       // (n-1)(n+3), the dimension of the family of curves
    long conditions = 0;  // (p+l)(n-1)
    CountVerdict verdict = CountVerdict::finite_expected;
    Classification classification = Classification::trivial;
    /// Number of curves when known (1 for unique existence, 6 for n = 3, (0, 6)).
    std::optional<int> count;

    friend bool operator==(const CountAnalysis&, const CountAnalysis&) = default;
};

/// Throws BadDimension for n < 3 and Error for negative counts.
CountAnalysis expected_count(int n, int p, int l);

std::string to_string(CountVerdict v);
std::string to_string(Classification c);

enum class Method { frame_fit, cremona, one_space, three_points, two_points, one_point };

std::string to_string(Method m);

struct ExistenceCertificate {
    Datum datum;
    ParamRnc curve;
    DetRnc det;
    VerificationReport report;
    Method method;

    friend bool operator==(const ExistenceCertificate&, const ExistenceCertificate&) = default;
};

/// Re-runs the verification of a certificate: the report is recomputed and
/// must pass, and both representations must describe the same curve.
bool verify_certificate(const ExistenceCertificate& cert);

/// Unique curve through n+3 points in linearly general position, by the
/// closed-form frame fit. NotGeneric witnesses are indices of n+1 dependent points.
ExistenceCertificate construct_through_points(const std::vector<ProjPoint>& points);

/// The same curve through the standard Cremona transformation: images of the
/// last two points span a line whose preimage is the curve.
ExistenceCertificate construct_through_points_cremona(const std::vector<ProjPoint>& points);

/// x_i -> prod_{j != i} x_j. Throws FundamentalLocus if every product vanishes.
ProjPoint cremona_apply(const ProjPoint& x);

/// Preimage of the line through a and b: a curve through the coordinate points.
/// Throws FundamentalLocus when the line meets the indeterminacy locus.
ParamRnc cremona_pullback_line(const ProjPoint& a, const ProjPoint& b);

ExistenceCertificate construct_np2_one_space(const std::vector<ProjPoint>& points, const Pencil& lam);
ExistenceCertificate construct_three_points(const std::vector<ProjPoint>& points, const std::vector<Pencil>& spaces);
ExistenceCertificate construct_two_points(const std::vector<ProjPoint>& points, const std::vector<Pencil>& spaces);
ExistenceCertificate construct_one_point(const ProjPoint& point, const std::vector<Pencil>& spaces);

struct UnsupportedResult {
    std::string reason;
};

using ConstructResult = std::variant<ExistenceCertificate, ObstructionCertificate, UnsupportedResult>;

/// Dispatches on (p, l). Throws BadShape if p + l != n + 3.
ConstructResult construct(const Datum& datum);

enum class ExistenceCase { through_points, one_space, three_points, two_points, one_point };

std::string to_string(ExistenceCase c);
/// (p, l) of a case in P^n.
std::pair<int, int> case_shape(ExistenceCase c, int n);

struct SpecialDatum {
    Datum datum;
    DetRnc generator;
};

/// Datum read off a seeded random 2 x n matrix M the way the existence proofs
/// build theirs: points as common zeros of row combinations, spaces as columns
/// (and sums of columns), so the curve of M satisfies it.
SpecialDatum special_datum(int n, ExistenceCase c, std::uint64_t seed);

}  // namespace rnckit
