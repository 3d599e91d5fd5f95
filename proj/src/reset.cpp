#include "rca/reset.hpp"

#include <algorithm>

namespace rca {

ResetState reset_act(const ResetGen& g, const ResetState& v) {
  if (g.size() != v.size()) throw Error(Errc::LengthMismatch, "generator and state lengths differ");
  ResetState out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].t == 0 ? g[i] : Clock{v[i].pos, v[i].t - 1};
  }
  return out;
}

ResetState reset_fold(const std::vector<ResetGen>& word, const ResetState& v) {
  ResetState out = v;
  for (const ResetGen& g : word) out = reset_act(g, out);
  return out;
}

std::vector<ResetGen> reset_solve_zero(const ResetState& v) {
  std::uint64_t max_t = 0;
  for (const Clock& c : v) max_t = std::max(max_t, c.t);
  return std::vector<ResetGen>(max_t + 1, ResetGen(v.size(), Clock{0, 0}));
}

std::vector<ResetGen> reset_reach(const ResetState& u, const ResetState& v) {
  if (u.size() != v.size()) throw Error(Errc::LengthMismatch, "states of different lengths");
  // A state whose clocks all read zero is re-armed to u by u alone.
  const bool all_due = std::all_of(v.begin(), v.end(), [](const Clock& c) { return c.t == 0; });
  if (all_due) return {u};
  std::vector<ResetGen> word = reset_solve_zero(v);
  word.push_back(u);
  return word;
}

}  // namespace rca
