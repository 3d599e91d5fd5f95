#pragma once

// The instruction algebra: particle rule powers, symbol permutations,
// head-local window rewrites, head shifts and safe rewrites, evaluated exactly
// on finite points.

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rca/config.hpp"
#include "rca/permbuild.hpp"
#include "rca/safety.hpp"

namespace rca {

// P^e: every particle moves from p to p - e, walls stay.
struct Particle {
  std::int64_t e = 0;
  friend bool operator==(const Particle&, const Particle&) = default;
};

struct SymbolPerm {
  Perm4 p;
  friend bool operator==(const SymbolPerm&, const SymbolPerm&) = default;
};

// Rewrites the 2r cells around every head that has no other head closer than
// 2r + 3. wp acts on A^(2r), left half first.
struct HeadLocal {
  std::int64_t r = 1;
  WordPerm wp;
  friend bool operator==(const HeadLocal&, const HeadLocal&) = default;
};

struct HeadShift {
  std::int64_t e = 0;
  friend bool operator==(const HeadShift&, const HeadShift&) = default;
};

struct SafeRewrite {
  SafeRewriteSpec spec;
  friend bool operator==(const SafeRewrite&, const SafeRewrite&) = default;
};

using Instruction = std::variant<Particle, SymbolPerm, HeadLocal, HeadShift, SafeRewrite>;

// Applied left to right.
using TransportWord = std::vector<Instruction>;

void validate_instruction(const Instruction& ins);

Config apply_instruction(const Config& x, const Instruction& ins);
std::vector<Config> apply_instruction(const std::vector<Config>& xs, const Instruction& ins);

Config apply_word(const Config& x, const TransportWord& w);
std::vector<Config> apply_word(const std::vector<Config>& xs, const TransportWord& w);
TupleK apply_word(const TupleK& t, const TransportWord& w);

Instruction invert_instruction(const Instruction& ins);
TransportWord invert_word(const TransportWord& w);

// "P", "SYM", "HL", "HS", "SR".
std::string instruction_tag(const Instruction& ins);
std::map<std::string, std::size_t> size_report(const TransportWord& w);

// Replays a relaxed-radius safe rewrite and its inverse on sample points;
// true when every sample returns to itself and the rewrite sites are stable.
bool relaxed_replay_check(const SafeRewrite& ins, const std::vector<Config>& samples);

}  // namespace rca
