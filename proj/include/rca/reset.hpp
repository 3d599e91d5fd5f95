#pragma once

// The reset system: k alarm clocks, each a (position, countdown) pair. A
// generator decrements every running clock and re-arms every clock at zero
// with the generator's value for that slot.

#include <cstdint>
#include <vector>

#include "rca/config.hpp"

namespace rca {

struct Clock {
  Position pos = 0;
  std::uint64_t t = 0;
  friend bool operator==(const Clock&, const Clock&) = default;
};

using ResetState = std::vector<Clock>;
using ResetGen = std::vector<Clock>;

ResetState reset_act(const ResetGen& g, const ResetState& v);
ResetState reset_fold(const std::vector<ResetGen>& word, const ResetState& v);

// Word taking v to (0,0)^k: (0,0)^k repeated max t + 1 times.
std::vector<ResetGen> reset_solve_zero(const ResetState& v);

// Word taking v to u: the zeroing word for v followed by u itself.
std::vector<ResetGen> reset_reach(const ResetState& u, const ResetState& v);

}  // namespace rca
