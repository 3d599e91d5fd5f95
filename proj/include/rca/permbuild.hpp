#pragma once

// Sparse permutations of fixed-length words over A = {0,1,2}, and the
// oblivious one-head machine layer built from them (shifts and local
// window permutations acting on A^Z).

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "rca/config.hpp"
#include "rca/safety.hpp"

namespace rca {

enum class Parity { Even, Odd };

// Identity outside `moved`. Every stored pair has src != dst.
class WordPerm {
 public:
  WordPerm() = default;
  // Throws unless the pairs form a permutation of their source set.
  WordPerm(std::size_t length, std::map<Word, Word> moved);

  static WordPerm identity(std::size_t length) { return WordPerm(length, {}); }

  std::size_t length() const { return length_; }
  const std::map<Word, Word>& moved() const { return moved_; }
  bool is_identity() const { return moved_.empty(); }

  Word operator()(const Word& w) const;
  WordPerm inverse() const;

  friend bool operator==(const WordPerm&, const WordPerm&) = default;

 private:
  std::size_t length_ = 0;
  std::map<Word, Word> moved_;
};

// (outer ∘ inner): inner applied first.
WordPerm compose(const WordPerm& outer, const WordPerm& inner);

Parity parity(const WordPerm& wp);

using WordPair = std::pair<Word, Word>;

WordPerm complete_partial_injection(const std::vector<WordPair>& pairs, std::size_t length);
WordPerm make_even(const WordPerm& wp);
WordPerm build_mapping_perm(const std::vector<WordPair>& pairs, std::size_t length);

struct G0Shift {
  std::int64_t e = 0;
};

// Window permutation at the absolute cells [lo, lo + wp.length() - 1].
struct G0Local {
  Position lo = 0;
  WordPerm wp;
};

using G0Step = std::variant<G0Shift, G0Local>;
using G0Word = std::vector<G0Step>;

Config g0_apply(const Config& y, const G0Word& w);
std::int64_t g0_psi(const G0Word& w);

// The word whose action is conjugated by shift(., n).
G0Word g0_translate(const G0Word& w, Position n);

}  // namespace rca
