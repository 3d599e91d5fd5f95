#pragma once

// A single safe rewrite permuting k >= 5 finite points from distinct orbits by
// an even permutation.

#include <cstddef>
#include <vector>

#include "rca/config.hpp"
#include "rca/generators.hpp"

namespace rca {

// beta[i] is the 0-based image of i.
using IndexPerm = std::vector<std::size_t>;

struct OrbitPermRequest {
  TupleK tuple;
  IndexPerm beta;
};

bool is_even(const IndexPerm& beta);

// Component i of the result is component beta^-1(i) of t.
TupleK permute_tuple(const TupleK& t, const IndexPerm& beta);

// Smallest m with every support inside [-m, m-1].
Position padding_radius(const TupleK& t);

// The returned SafeRewrite maps x_i to x_{beta^-1(i)}.
Instruction orbit_permutation_instruction(const OrbitPermRequest& req);

}  // namespace rca
