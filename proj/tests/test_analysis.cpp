#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "helpers.hpp"
#include "rca/analysis.hpp"

using namespace rca;

namespace {

CycleSpec cycles(std::vector<std::size_t> lengths) { return CycleSpec::from_lengths(lengths); }

}  // namespace

TEST(KOfFinite, TableRows) {
  EXPECT_EQ(k_of_finite(cycles({5})), KValue::Zero);
  EXPECT_EQ(k_of_finite(cycles({1, 1})), KValue::Bottom);
  EXPECT_EQ(k_of_finite(cycles({2, 2})), KValue::Two);
  EXPECT_EQ(k_of_finite(cycles({1, 1, 1})), KValue::Two);
  EXPECT_EQ(k_of_finite(cycles({2, 3})), KValue::Bottom);
  EXPECT_EQ(k_of_finite(cycles({1, 4})), KValue::Zero);
}

TEST(KOfFinite, BruteForceExamples) {
  EXPECT_EQ(k_of_finite_bruteforce(cycles({3})), KValue::Zero);
  EXPECT_EQ(k_of_finite_bruteforce(cycles({1, 1})), KValue::Bottom);
  EXPECT_EQ(k_of_finite_bruteforce(cycles({1, 1, 1})), KValue::Two);
  EXPECT_ERRC(k_of_finite_bruteforce(cycles({9})), Errc::TooLarge);
}

// The closed form returns bottom for these specs, where the automorphism group
// is computable and the true value is known.
TEST(KOfFinite, AgreesWithBruteForceOutsideKnownMisses) {
  const std::map<std::vector<std::size_t>, KValue> misses = {
      {{1, 2, 3}, KValue::Zero},
      {{2, 2, 3}, KValue::Two},
      {{2, 3, 3}, KValue::Two},
      {{1, 2, 2, 3}, KValue::Two},
      {{1, 1, 1, 2, 3}, KValue::Two},
  };
  for (const auto& [lengths, truth] : misses) {
    const CycleSpec cs = CycleSpec::from_lengths(lengths);
    EXPECT_EQ(k_of_finite(cs), KValue::Bottom);
    EXPECT_EQ(k_of_finite_bruteforce(cs), truth);
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const CycleSpec& cs : cycle_specs_with_points(n)) {
      bool known = false;
      for (const auto& [lengths, _] : misses) known = known || CycleSpec::from_lengths(lengths).counts == cs.counts;
      if (known) continue;
      EXPECT_EQ(k_of_finite(cs), k_of_finite_bruteforce(cs));
    }
  }
}

TEST(KOfFinite, CasesPartitionInputs) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const CycleSpec& cs : cycle_specs_with_points(n)) EXPECT_NO_THROW(k_of_finite(cs));
  }
}

TEST(CycleSpecs, PartitionCounts) {
  EXPECT_EQ(cycle_specs_with_points(5).size(), 7u);
  EXPECT_EQ(cycle_specs_with_points(7).size(), 15u);
}

TEST(NonshiftWitness, Examples) {
  WitnessResult r = find_nonshift_witness({SymbolPerm{Perm4({0, 2, 1, 3})}}, 3, 4);
  ASSERT_TRUE(std::holds_alternative<Witness>(r));
  EXPECT_EQ(std::get<Witness>(r).x, C("@0:1"));

  r = find_nonshift_witness({Particle{1}}, 3, 4);
  ASSERT_TRUE(std::holds_alternative<Witness>(r));
  const Witness& w = std::get<Witness>(r);
  EXPECT_FALSE(orbit_equal(apply_word(w.x, {Particle{1}}), w.x));

  const Config x = C("@0:12");
  const Config image = apply_word(x, {Particle{1}});
  Config expected = C("@-1:1");
  expected.set(1, kWall);
  EXPECT_EQ(image, expected);
  EXPECT_EQ(canonical_form(image).config.digits(), "102");
  EXPECT_FALSE(orbit_equal(image, x));

  r = find_nonshift_witness({}, 3, 4);
  ASSERT_TRUE(std::holds_alternative<IsShift>(r));
  EXPECT_EQ(std::get<IsShift>(r).n, 0);
}

TEST(NonshiftWitness, DetectsPureShiftBehaviour) {
  const WitnessResult r = find_nonshift_witness({Particle{2}}, 3, 4);
  ASSERT_TRUE(std::holds_alternative<Witness>(r));
  const auto only_particles = [](const Config& x) {
    for (const auto& [p, s] : x.cells()) {
      if (s != kParticle) return false;
    }
    return true;
  };
  for (const Config& x : enumerate_finite(3, 5)) {
    if (only_particles(x)) {
      EXPECT_TRUE(orbit_equal(apply_word(x, {Particle{2}}), x));
    }
  }
}

TEST(CheckCommute, Examples) {
  const std::vector<Config> samples = commute_samples(7, 200, 3);
  const TransportWord sym = {SymbolPerm{Perm4::transposition(kParticle, kWall)}};
  const TransportWord p1 = {Particle{1}};
  EXPECT_TRUE(std::holds_alternative<AllCommuted>(check_commute(sym, sym, samples)));
  EXPECT_TRUE(std::holds_alternative<AllCommuted>(check_commute(p1, {Particle{5}}, samples)));
  const CommuteResult r = check_commute(sym, p1, samples);
  ASSERT_TRUE(std::holds_alternative<CounterExample>(r));
  EXPECT_EQ(std::get<CounterExample>(r).x, C("@0:1"));
}

TEST(CheckCommute, Symmetric) {
  const std::vector<Config> samples = commute_samples(8, 100, 2);
  const std::vector<TransportWord> words = {
      {Particle{1}}, {HeadShift{1}}, {SymbolPerm{Perm4::transposition(kWall, kHead)}}, {}};
  for (const auto& a : words) {
    for (const auto& b : words) {
      EXPECT_EQ(check_commute(a, b, samples).index(), check_commute(b, a, samples).index());
    }
  }
}
