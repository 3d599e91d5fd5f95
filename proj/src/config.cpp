#include "rca/config.hpp"

#include <algorithm>
#include <limits>

namespace rca {

Position checked_add(Position a, Position b) {
  Position out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::Overflow, "position arithmetic overflow");
  }
  return out;
}

Position checked_sub(Position a, Position b) {
  Position out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(Errc::Overflow, "position arithmetic overflow");
  }
  return out;
}

Position saturating_add(Position a, Position b) {
  Position out;
  if (__builtin_add_overflow(a, b, &out)) {
    return b > 0 ? std::numeric_limits<Position>::max() : std::numeric_limits<Position>::min();
  }
  return out;
}

Position saturating_sub(Position a, Position b) {
  Position out;
  if (__builtin_sub_overflow(a, b, &out)) {
    return b < 0 ? std::numeric_limits<Position>::max() : std::numeric_limits<Position>::min();
  }
  return out;
}

Config::Config(const std::map<Position, Symbol>& cells) {
  for (const auto& [p, s] : cells) {
    set(p, s);
  }
}

Config Config::from_digits(Position offset, std::string_view digits) {
  Config x;
  Position p = offset;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '3') {
      throw Error(Errc::Parse, "symbol outside 0..3: '" + std::string(1, c) + "'");
    }
    if (c != '0') {
      x.cells_[p] = static_cast<Symbol>(c - '0');
    }
    if (i + 1 < digits.size()) {
      p = checked_add(p, 1);
    }
  }
  return x;
}

Symbol Config::at(Position p) const {
  const auto it = cells_.find(p);
  return it == cells_.end() ? kZero : it->second;
}

void Config::set(Position p, Symbol s) {
  if (s >= kAlphabetSize) {
    throw Error(Errc::Parse, "symbol outside 0..3");
  }
  if (s == kZero) {
    cells_.erase(p);
  } else {
    cells_[p] = s;
  }
}

Position Config::min_position() const {
  if (cells_.empty()) throw Error(Errc::ZeroPoint, "zero point has no support");
  return cells_.begin()->first;
}

Position Config::max_position() const {
  if (cells_.empty()) throw Error(Errc::ZeroPoint, "zero point has no support");
  return cells_.rbegin()->first;
}

std::string Config::digits() const {
  if (cells_.empty()) return {};
  return window(min_position(), max_position());
}

std::string Config::window(Position lo, Position hi) const {
  std::string out;
  if (hi < lo) return out;
  out.assign(static_cast<std::size_t>(hi - lo) + 1, '0');
  for (auto it = cells_.lower_bound(lo); it != cells_.end() && it->first <= hi; ++it) {
    out[static_cast<std::size_t>(it->first - lo)] = static_cast<char>('0' + it->second);
  }
  return out;
}

Config shift(const Config& x, Position n) {
  Config out;
  for (const auto& [p, s] : x.cells()) {
    out.set(checked_sub(p, n), s);
  }
  return out;
}

CanonicalForm canonical_form(const Config& x) {
  if (x.is_zero()) throw Error(Errc::ZeroPoint, "canonical form of the zero point");
  const Position offset = x.min_position();
  return {shift(x, offset), offset};
}

bool orbit_equal(const Config& x, const Config& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return x.digits() == y.digits();
}

Tracks tracks(const Config& x) {
  Tracks t;
  for (const auto& [p, s] : x.cells()) {
    if (s & 1) t.particles.push_back(p);
    if (s & 2) t.walls.push_back(p);
  }
  return t;
}

Config from_tracks(std::span<const Position> particles, std::span<const Position> walls) {
  std::map<Position, Symbol> cells;
  for (Position p : particles) cells[p] |= kParticle;
  for (Position w : walls) cells[w] |= kWall;
  return Config(cells);
}

std::vector<Position> head_positions(const Config& x) {
  std::vector<Position> out;
  for (const auto& [p, s] : x.cells()) {
    if (s == kHead) out.push_back(p);
  }
  return out;
}

ClassFlags classify(const Config& x) {
  if (x.is_zero()) throw Error(Errc::ZeroPoint, "classify requires a nonzero point");
  const Tracks t = tracks(x);
  const std::vector<Position> heads = head_positions(x);
  ClassFlags f;
  const bool separated =
      t.particles.empty() || t.walls.empty() || t.particles.back() < t.walls.front();
  f.prepregood = heads.empty() && separated;
  f.pregood = f.prepregood && !t.particles.empty();
  f.good = f.pregood && !t.walls.empty();
  f.unihead = heads.size() == 1;
  f.great = f.unihead && heads.front() == 0;
  return f;
}

TupleK TupleK::validate(std::vector<Config> components) {
  if (components.empty()) {
    throw Error(Errc::LengthMismatch, "tuple must have at least one component");
  }
  std::vector<std::string> words;
  words.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) {
      throw Error(Errc::ZeroPoint, "component " + std::to_string(i) + " is the zero point", i);
    }
    words.push_back(components[i].digits());
  }
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (words[i] == words[j]) {
        throw Error(Errc::OrbitCollision,
                    "components " + std::to_string(i) + " and " + std::to_string(j) +
                        " lie in the same shift orbit",
                    i, j);
      }
    }
  }
  return TupleK(std::move(components));
}

TupleK validate_tuple(std::vector<Config> components) {
  return TupleK::validate(std::move(components));
}

Perm4::Perm4(std::array<Symbol, 4> img) : img_(img) {
  std::array<bool, 4> seen{};
  for (Symbol s : img_) {
    if (s >= 4 || seen[s]) throw Error(Errc::IllFormedInstruction, "not a permutation of 0..3");
    seen[s] = true;
  }
  if (img_[0] != 0) throw Error(Errc::IllFormedInstruction, "symbol permutation must fix 0");
}

Perm4 Perm4::transposition(Symbol a, Symbol b) {
  std::array<Symbol, 4> img{0, 1, 2, 3};
  std::swap(img[a], img[b]);
  return Perm4(img);
}

Perm4 Perm4::inverse() const {
  std::array<Symbol, 4> inv{};
  for (Symbol s = 0; s < 4; ++s) inv[img_[s]] = s;
  return Perm4(inv);
}

}  // namespace rca
