#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rnckit {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p", "p/q" (q != 0). Whitespace around the token is allowed.
/// Throws ParseError on anything else, tagged with `location`.
Scalar parse_scalar(std::string_view text, const std::string& location = {});

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Scalar& x);

/// num/den in canonical form. mpq_class(num, den) alone does not canonicalize.
inline Scalar rational(long num, long den) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

bool is_zero(const Vector& v);

/// Scales v so that its first nonzero entry equals 1. Zero vectors are left alone.
void normalize_first(Vector& v);

/// Scales v so that its last nonzero entry equals 1. Zero vectors are left alone.
void normalize_last(Vector& v);

Scalar dot(const Vector& a, const Vector& b);

}  // namespace rnckit
