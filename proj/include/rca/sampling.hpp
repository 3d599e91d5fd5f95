#pragma once

// Seeded random points and tuples for tests and the self-test.

#include <cstddef>
#include <random>

#include "rca/config.hpp"

namespace rca {

using Rng = std::mt19937_64;

// Nonzero point of width <= max_width with leftmost cell in [-spread, spread].
Config random_config(Rng& rng, std::size_t max_width, Position spread);

// Like random_config with exactly one head.
Config random_single_head(Rng& rng, std::size_t max_width, Position spread);

// k points from distinct orbits.
TupleK random_tuple(Rng& rng, std::size_t k, std::size_t max_width, Position spread);

}  // namespace rca
