#pragma once

// Finite-support points of the full shift over {0,1,2,3}.
//
// Symbol n is read as the pair (n mod 2, n / 2): the low bit is the particle
// track, the high bit the wall track. A head (3) is a particle sitting on a
// wall.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rca/error.hpp"

namespace rca {

using Position = std::int64_t;
using Symbol = std::uint8_t;

inline constexpr Symbol kZero = 0;
inline constexpr Symbol kParticle = 1;
inline constexpr Symbol kWall = 2;
inline constexpr Symbol kHead = 3;
inline constexpr int kAlphabetSize = 4;

// Overflow-checked position arithmetic.
Position checked_add(Position a, Position b);
Position checked_sub(Position a, Position b);

// Saturating arithmetic for interval tests with astronomically large radii.
Position saturating_add(Position a, Position b);
Position saturating_sub(Position a, Position b);

class Config {
 public:
  Config() = default;
  explicit Config(const std::map<Position, Symbol>& cells);

  // `digits` over 0..3, first digit at `offset`.
  static Config from_digits(Position offset, std::string_view digits);

  Symbol at(Position p) const;
  void set(Position p, Symbol s);

  bool is_zero() const { return cells_.empty(); }
  std::size_t support_size() const { return cells_.size(); }
  // Both require a nonzero point.
  Position min_position() const;
  Position max_position() const;

  const std::map<Position, Symbol>& cells() const { return cells_; }

  // Digits from the leftmost to the rightmost nonzero cell ("" for 0^Z).
  std::string digits() const;
  // Digits of the window [lo, hi] (zeros included).
  std::string window(Position lo, Position hi) const;

  friend bool operator==(const Config&, const Config&) = default;
  friend auto operator<=>(const Config&, const Config&) = default;

 private:
  std::map<Position, Symbol> cells_;
};

// Result at position i is x_{i+n}.
Config shift(const Config& x, Position n);

struct CanonicalForm {
  Config config;
  Position offset = 0;
};

// Leftmost nonzero cell moved to 0; shift(x, offset) == config.
CanonicalForm canonical_form(const Config& x);

bool orbit_equal(const Config& x, const Config& y);

struct Tracks {
  std::vector<Position> particles;  // sorted
  std::vector<Position> walls;      // sorted
};

Tracks tracks(const Config& x);
Config from_tracks(std::span<const Position> particles, std::span<const Position> walls);
std::vector<Position> head_positions(const Config& x);

struct ClassFlags {
  bool prepregood = false;
  bool pregood = false;
  bool good = false;
  bool unihead = false;
  bool great = false;
};

ClassFlags classify(const Config& x);

// A nonempty list of nonzero points from pairwise distinct shift orbits.
class TupleK {
 public:
  static TupleK validate(std::vector<Config> components);

  std::size_t size() const { return components_.size(); }
  const Config& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Config>& components() const { return components_; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  friend bool operator==(const TupleK&, const TupleK&) = default;

 private:
  explicit TupleK(std::vector<Config> components) : components_(std::move(components)) {}
  std::vector<Config> components_;
};

TupleK validate_tuple(std::vector<Config> components);

// Permutation of the alphabet fixing 0.
class Perm4 {
 public:
  Perm4() : img_{0, 1, 2, 3} {}
  explicit Perm4(std::array<Symbol, 4> img);

  static Perm4 transposition(Symbol a, Symbol b);

  Symbol operator()(Symbol s) const { return img_[s]; }
  const std::array<Symbol, 4>& images() const { return img_; }
  Perm4 inverse() const;

  friend bool operator==(const Perm4&, const Perm4&) = default;

 private:
  std::array<Symbol, 4> img_;
};

}  // namespace rca
