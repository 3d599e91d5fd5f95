#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rca/reset.hpp"
#include "rca/sampling.hpp"

using namespace rca;

namespace {

ResetState random_state(Rng& rng, std::size_t k) {
  ResetState v;
  for (std::size_t i = 0; i < k; ++i) {
    v.push_back({std::uniform_int_distribution<Position>(-20, 20)(rng),
                 std::uniform_int_distribution<std::uint64_t>(0, 15)(rng)});
  }
  return v;
}

}  // namespace

TEST(ResetAct, Examples) {
  EXPECT_EQ(reset_act({{0, 0}, {0, 0}}, {{3, 2}, {5, 1}}), (ResetState{{3, 1}, {5, 0}}));
  EXPECT_EQ(reset_act({{7, 9}, {1, 1}}, {{5, 0}, {2, 3}}), (ResetState{{7, 9}, {2, 2}}));
  EXPECT_EQ(reset_act({{0, 0}}, {{4, 0}}), (ResetState{{0, 0}}));
  EXPECT_ERRC(reset_act({{0, 0}}, {{1, 1}, {2, 2}}), Errc::LengthMismatch);
}

TEST(ResetSolveZero, Examples) {
  const ResetState v = {{3, 2}, {-1, 0}};
  const auto word = reset_solve_zero(v);
  ASSERT_EQ(word.size(), 3u);
  ResetState s = reset_act(word[0], v);
  EXPECT_EQ(s, (ResetState{{3, 1}, {0, 0}}));
  s = reset_act(word[1], s);
  EXPECT_EQ(s, (ResetState{{3, 0}, {0, 0}}));
  EXPECT_EQ(reset_act(word[2], s), (ResetState{{0, 0}, {0, 0}}));
  EXPECT_EQ(reset_solve_zero({{0, 0}, {0, 0}}).size(), 1u);
  EXPECT_EQ(reset_solve_zero({{9, 5}}).size(), 6u);
}

TEST(ResetReach, Examples) {
  const ResetState u = {{2, 7}};
  EXPECT_EQ(reset_reach(u, {{0, 0}}), std::vector<ResetGen>{u});
  EXPECT_EQ(reset_fold(reset_reach(u, u), u), u);
  EXPECT_ERRC(reset_reach(u, {{1, 1}, {2, 2}}), Errc::LengthMismatch);
}

TEST(ResetReach, RandomFold) {
  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const ResetState u = random_state(rng, 3);
    const ResetState v = random_state(rng, 3);
    EXPECT_EQ(reset_fold(reset_reach(u, v), v), u);
    std::uint64_t max_t = 0;
    for (const Clock& c : v) max_t = std::max(max_t, c.t);
    const auto zero = reset_solve_zero(v);
    EXPECT_EQ(zero.size(), max_t + 1);
    EXPECT_EQ(reset_fold(zero, v), ResetState(3, Clock{0, 0}));
  }
}

TEST(ResetAct, DecrementsRunningClocks) {
  Rng rng(52);
  for (int i = 0; i < 300; ++i) {
    const ResetState v = random_state(rng, 4);
    const ResetGen g = random_state(rng, 4);
    const ResetState w = reset_act(g, v);
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Clock expected = v[j].t > 0 ? Clock{v[j].pos, v[j].t - 1} : g[j];
      EXPECT_EQ(w[j], expected);
    }
  }
}
