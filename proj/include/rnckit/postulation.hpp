#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rnckit/curve.hpp"
#include "rnckit/form.hpp"

namespace rnckit {

/// Double points and doubled codimension-two spaces in P^n, tested against degree-d forms.
struct SchemeSpec {
    int n = 0;
    std::vector<ProjPoint> double_points;
    std::vector<Pencil> double_spaces;
    int degree = 1;

    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

struct PostulationReport {
    long total_monomials = 0;
    std::vector<long> item_conditions;  // points first, then spaces
    long conditions_sum = 0;
    /// (n+2)(n+1) + C(n+2,4) + 2 C(n+1,3), set for n+2 double points plus one
    /// double space in degree 4.
    std::optional<long> h_formula;
    long expected = 0;  // min(total_monomials, conditions_sum)
    long actual = 0;    // H(X, d)
    long deficit = 0;
    std::optional<std::string> note;

    friend bool operator==(const PostulationReport&, const PostulationReport&) = default;
};

/// Rows are linear conditions on the coefficients of a degree-d form over the
/// descending-lex monomial basis. Each double point contributes its n+1
/// partial derivatives (the value follows by Euler's relation); each double
/// space contributes the coefficients of monomials of degree <= 1 in the
/// space's two forms, read in adapted coordinates.
Matrix conditions_rows(const SchemeSpec& spec);

PostulationReport hilbert_function(const SchemeSpec& spec);

long binomial(long n, long k);

struct DefectWitness {
    ParamRnc curve;
    long intersection_lower_bound = 0;
    long bezout_bound = 0;
    /// For seven double points in P^4: the secant variety of the curve, a
    /// cubic singular along it and hence in the kernel of the conditions.
    std::optional<Form> hypersurface;
};

/// Curve explaining the deficit for n+2 double points plus one double space
/// in degree 4, or for seven double points in P^4 in degree 3. Returns
/// nullopt for other shapes; throws NotGeneric if the construction fails.
std::optional<DefectWitness> defect_explanation(const SchemeSpec& spec);

/// Seeded double points with no n+1 of them dependent.
std::vector<ProjPoint> generic_points(int n, int count, std::uint64_t seed);

/// n+2 seeded double points plus one seeded double space, degree 4.
SchemeSpec lemma_shape(int n, std::uint64_t seed);

struct AhRow {
    int n = 0;
    int p = 0;
    int d = 0;
    bool exceptional = true;
    PostulationReport report;

    friend bool operator==(const AhRow&, const AhRow&) = default;
};

/// Double point schemes that fail to impose independent conditions in degree
/// 4 (5 points in P^2, 9 in P^3, 14 in P^4) and degree 3 (7 points in P^4),
/// followed by the control 5 points in P^2, degree 3.
std::vector<AhRow> ah_exceptions_suite(std::uint64_t seed);

}  // namespace rnckit
