#pragma once

// Safe rewriting: a permutation of a word set U applied only at occurrences
// that are isolated from every other U-occurrence (radius m_rad) and whose
// marker occurrences (words of V) near the site stay inside the rewritten
// block (radius ell). With V-safe U and strict radii the rewrite sites are the
// same before and after rewriting, so permutations of U compose exactly.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rca/config.hpp"

namespace rca {

// Words are digit strings over '0'..'3'.
using Word = std::string;

enum class WordSetKind {
  Explicit,
  // A^11 s A^9  ∪  A^10 s A^j s A^(9-j), j in {0,1,2}
  Sigma3Pi,
  // A^10 s A^10  ∪  A^10 s A^j s A^(9-j), j in {0,1,2}
  Sigma3Tau,
  // every word of the given length containing a nonzero symbol
  NonzeroN,
};

struct WordSet {
  WordSetKind kind = WordSetKind::Explicit;
  std::size_t length = 0;
  std::set<Word> words;  // Explicit only

  static WordSet explicit_words(std::set<Word> words);
  static WordSet sigma3_pi();
  static WordSet sigma3_tau();
  static WordSet nonzero(std::size_t n);

  bool contains(std::string_view w) const;

  // For the schematic head families: every admissible set of head offsets.
  std::vector<std::vector<std::size_t>> head_patterns() const;

  friend bool operator==(const WordSet&, const WordSet&) = default;
};

enum class MapKind { Explicit, Sigma3Pi, Sigma3Tau };

// Permutation of U. Explicit maps list (src, dst) pairs; absent words are fixed.
struct RewriteMap {
  MapKind kind = MapKind::Explicit;
  std::map<Word, Word> pairs;

  Word apply(const Word& w) const;
  RewriteMap inverse() const;

  friend bool operator==(const RewriteMap&, const RewriteMap&) = default;
};

// (outer ∘ inner) for explicit maps: inner applied first.
RewriteMap compose(const RewriteMap& outer, const RewriteMap& inner);

enum class RadiusMode { Strict, Relaxed };

struct StrictParams {
  Position ell = 0;
  Position m_rad = 0;
  bool saturated = false;
};

// Strict radii for a 4-letter alphabet: ell = max(4^h + 1, 2k + h),
// m_rad = ell + 2k + h.
StrictParams strict_params(std::size_t k, std::size_t h);

struct SafeRewriteSpec {
  std::size_t k = 0;  // length of U-words
  std::size_t h = 0;  // length of V-words
  WordSet U;
  WordSet V;
  RewriteMap pi;
  // Unset means the minimal strict value.
  std::optional<Position> ell;
  std::optional<Position> m_rad;
  RadiusMode mode = RadiusMode::Strict;

  Position resolved_ell() const;
  Position resolved_m_rad() const;

  SafeRewriteSpec with_map(RewriteMap m) const;
  SafeRewriteSpec inverse() const { return with_map(pi.inverse()); }

  friend bool operator==(const SafeRewriteSpec&, const SafeRewriteSpec&) = default;
};

// Throws Error(IllFormedSpec) (or IllFormedWordSet) describing the first
// broken invariant. Strict specs must carry a safety certificate from one of
// the two validators below.
void validate_spec(const SafeRewriteSpec& spec);

std::vector<Position> occurrences(const Config& x, const WordSet& W);
std::vector<Position> chi_sites(const Config& x, const SafeRewriteSpec& spec);
Config apply_safe_rewrite(const Config& x, const SafeRewriteSpec& spec);

struct SafetyViolation {
  Word first;
  Word second;
  std::string reason;
};

// Words of length 3*k3 with the head symbol s confined to the middle third,
// present in every word, and with equal head counts forcing equal leftmost
// head positions.
std::optional<SafetyViolation> validate_sufficient_safety(const std::set<Word>& U, Symbol s,
                                                          std::size_t k3);
// Same check on a schematic head family (head symbol 3), exact on its patterns.
std::optional<SafetyViolation> validate_sufficient_safety(const WordSet& U);

// Words of length 3n inside 0^n Σ^n 0^n, none all-zero, and no nonzero core
// occurring at two different offsets.
std::optional<SafetyViolation> validate_zero_padded(const std::set<Word>& U, std::size_t n);

inline constexpr std::size_t kSigmaHeadRadius = 10;

const SafeRewriteSpec& sigma3_pi_spec();
const SafeRewriteSpec& sigma3_tau_spec();

// One step of the head-moving automorphism. direction must be +1 or -1.
Config head_shift_once(const Config& x, int direction);

}  // namespace rca
