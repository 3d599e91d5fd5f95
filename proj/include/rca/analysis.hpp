#pragma once

// k(X) for finite subshifts, non-shift witnesses and sampled commutation
// checks.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rca/config.hpp"
#include "rca/generators.hpp"

namespace rca {

// Cycle lengths of the shift on a finite subshift: length -> count.
struct CycleSpec {
  std::map<std::size_t, std::size_t> counts;

  static CycleSpec from_lengths(const std::vector<std::size_t>& lengths);
  std::size_t total_points() const;
  std::size_t c(std::size_t length) const;
};

enum class KValue { Bottom, Zero, Two };

// "bottom", "0", "2".
std::string to_string(KValue k);

KValue k_of_finite(const CycleSpec& cs);

// Enumerates the automorphism group; throws TooLarge above 8 points.
KValue k_of_finite_bruteforce(const CycleSpec& cs);

// Every cycle spec with the given number of points.
std::vector<CycleSpec> cycle_specs_with_points(std::size_t n);

struct Witness {
  Config x;
  Config image;
};
struct IsShift {
  Position n = 0;
};
struct Inconclusive {};
using WitnessResult = std::variant<Witness, IsShift, Inconclusive>;

// Nonzero points starting at 0, by width and then lexicographically.
std::vector<Config> enumerate_finite(std::size_t support_bound, std::size_t width_bound);

WitnessResult find_nonshift_witness(const TransportWord& w, std::size_t support_bound,
                                    std::size_t width_bound);

struct AllCommuted {};
struct CounterExample {
  Config x;
  Config ab;  // wb first, then wa
  Config ba;
};
using CommuteResult = std::variant<AllCommuted, CounterExample>;

// Sampled, so AllCommuted is evidence and not a proof.
CommuteResult check_commute(const TransportWord& wa, const TransportWord& wb,
                            const std::vector<Config>& samples);

// Every point of width <= exhaustive_width plus `random_count` seeded ones.
std::vector<Config> commute_samples(std::uint64_t seed, std::size_t random_count,
                                    std::size_t exhaustive_width);

}  // namespace rca
