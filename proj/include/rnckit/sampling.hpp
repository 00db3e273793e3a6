#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rnckit/curve.hpp"
#include "rnckit/datum.hpp"

namespace rnckit {

/// Seeded generator. Draws are reduced from mt19937_64 by hand so the same seed
/// gives the same data with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi);
    /// Nonzero integer in [-bound, bound].
    long nonzero(long bound);
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

Vector random_vector(int size, Rng& rng, long bound = 9);
ProjPoint random_point(int n, Rng& rng, long bound = 9);
Pencil random_pencil(int n, Rng& rng, long bound = 9);
ProjTransform random_transform(int n, Rng& rng, long bound = 3);

/// Random curve: moment curve pushed through a random invertible matrix.
ParamRnc random_curve(int n, Rng& rng, long bound = 3);

/// `count` pairwise distinct parameters, drawn from small integers and (1:0).
std::vector<Param> random_params(int count, Rng& rng, long bound = 30);

/// A datum satisfied by `curve`: p points and l chord spaces at fresh
/// pairwise distinct parameters. `params` receives the parameters used,
/// points first, then each chord's n-1 parameters. Parameters are drawn from
/// [-bound, bound]; small boxes hit special configurations more often.
Datum forward_datum(const ParamRnc& curve, int p, int l, Rng& rng, std::vector<Param>* params = nullptr,
                    long bound = 30);

/// Independent random points and pencils.
Datum random_datum(int n, int p, int l, Rng& rng, long bound = 9);

}  // namespace rnckit
