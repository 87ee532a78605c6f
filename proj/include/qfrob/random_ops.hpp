#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "qfrob/operation.hpp"

namespace qfrob {

using Rng = std::mt19937_64;

/// A uniformly random nonzero coefficient in {-3..3} \ {0}.
Rat random_coeff(Rng& rng);

/// Random sparse operation with about `entries` nonzero entries. If max_radius is
/// set, every entry keeps all input-output distances within it.
Operation random_operation(const CircleComplex& cx, int m, int n, Degree p, std::size_t entries, Rng& rng,
                           std::optional<int> max_radius = std::nullopt);

/// A pair (outer P, inner Q, wire) of random operations with radii at most
/// `max_radius` whose single-wire composite is nonzero.
struct ComposablePair {
    Operation outer;
    Operation inner;
    Wire wire;
};
ComposablePair random_composable_pair(const CircleComplex& cx, int max_arity, int max_radius, Rng& rng);

/// A random permutation of k slots.
Permutation random_permutation(std::size_t k, Rng& rng);

}  // namespace qfrob
