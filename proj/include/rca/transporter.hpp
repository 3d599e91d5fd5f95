#pragma once

// Transport between tuples of finite points from distinct shift orbits.
//
// Both endpoints are driven to one canonical tuple: make every component good
// (particles left of walls, no heads), schedule the first collision of each
// component under the inverse particle rule and re-arm it so that all
// components collide at the origin at a common time (great), then rewrite
// around the heads into the canonical tuple. The transport word is the source
// pipeline followed by the inverse of the destination pipeline.

#include <cstdint>
#include <optional>
#include <vector>

#include "rca/config.hpp"
#include "rca/generators.hpp"

namespace rca {

struct ClockReading {
  Position a = 0;
  std::uint64_t t = 0;
  friend bool operator==(const ClockReading&, const ClockReading&) = default;
};

// nullopt means "not clock-like".
std::optional<ClockReading> phi_clock(const Config& x);

struct BuzzPlan {
  std::vector<Position> a;         // first collision position per component
  std::vector<std::uint64_t> tau;  // inverse particle steps until it
  std::uint64_t horizon = 0;       // T = max tau + 1
};

struct Stage {
  TransportWord word;
  TupleK tuple;
};

Stage make_good(const TupleK& t);
BuzzPlan first_buzz_schedule(const TupleK& good);
Stage make_great(const TupleK& good);
TupleK canonical_great(std::size_t k);
Stage make_canonical(const TupleK& great);

// make_good, make_great, make_canonical. Great tuples skip to make_canonical
// and the canonical tuple itself gets the empty word.
Stage pipeline(const TupleK& t);

TransportWord transport(const TupleK& src, const TupleK& dst);
bool verify(const TransportWord& w, const TupleK& src, const TupleK& dst);

}  // namespace rca
