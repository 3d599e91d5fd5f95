#include "rca/safety.hpp"

#include <algorithm>
#include <limits>

namespace rca {

namespace {

constexpr std::size_t kSigmaLength = 2 * kSigmaHeadRadius + 1;
constexpr char kHeadDigit = '3';

bool valid_digits(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '3'; });
}

bool has_nonzero(std::string_view w) {
  return std::any_of(w.begin(), w.end(), [](char c) { return c != '0'; });
}

std::size_t count_heads(std::string_view w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), kHeadDigit));
}

// Dense copy of a finite point with zero padding on both sides.
struct DenseView {
  Position lo = 0;
  std::string cells;

  DenseView(const Config& x, std::size_t pad) {
    if (x.is_zero()) return;
    lo = checked_sub(x.min_position(), static_cast<Position>(pad));
    const Position hi = checked_add(x.max_position(), static_cast<Position>(pad));
    cells = x.window(lo, hi);
  }

  // Word of length len starting at absolute position p (zeros outside).
  Word read(Position p, std::size_t len) const {
    Word out(len, '0');
    for (std::size_t j = 0; j < len; ++j) {
      const Position q = p + static_cast<Position>(j);
      if (q >= lo && q - lo < static_cast<Position>(cells.size())) {
        out[j] = cells[static_cast<std::size_t>(q - lo)];
      }
    }
    return out;
  }
};

std::vector<Position> explicit_occurrences(const Config& x, const WordSet& W) {
  std::vector<Position> out;
  if (x.is_zero() || W.words.empty()) return out;
  const std::size_t k = W.length;
  const DenseView view(x, k);
  const Position first = checked_sub(x.min_position(), static_cast<Position>(k) - 1);
  const Position last = x.max_position();
  for (Position i = first; i <= last; ++i) {
    const std::size_t off = static_cast<std::size_t>(i - view.lo);
    if (W.words.count(view.cells.substr(off, k))) out.push_back(i);
  }
  return out;
}

std::vector<Position> pattern_occurrences(const Config& x, const WordSet& W) {
  const std::vector<Position> heads = head_positions(x);
  const auto patterns = W.head_patterns();
  std::set<Position> candidates;
  for (Position q : heads) {
    for (const auto& pattern : patterns) {
      for (std::size_t o : pattern) candidates.insert(q - static_cast<Position>(o));
    }
  }
  std::vector<Position> out;
  const Position len = static_cast<Position>(W.length);
  for (Position i : candidates) {
    std::vector<std::size_t> offsets;
    for (auto it = std::lower_bound(heads.begin(), heads.end(), i);
         it != heads.end() && *it < i + len; ++it) {
      offsets.push_back(static_cast<std::size_t>(*it - i));
    }
    if (std::find(patterns.begin(), patterns.end(), offsets) != patterns.end()) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Position> nonzero_occurrences(const Config& x, std::size_t n) {
  std::vector<Position> out;
  if (x.is_zero()) return out;
  const Position first = checked_sub(x.min_position(), static_cast<Position>(n) - 1);
  for (Position i = first; i <= x.max_position(); ++i) out.push_back(i);
  return out;
}

// Head-family rearrangements. For a U1 / V1 word the letter a in A is encoded
// as the gap between two heads; for a U2 word the gap is decoded back.
Word split_head(const Word& w, std::size_t a_index) {
  const std::size_t a = static_cast<std::size_t>(w[a_index] - '0');
  const Word u = w.substr(0, kSigmaHeadRadius);
  const Word v = w.substr(kSigmaHeadRadius + 2);
  return u + kHeadDigit + v.substr(0, a) + kHeadDigit + v.substr(a);
}

// U2 word u s v' with a second head at 11 + j. Returns (u, j, v) with the
// second head removed from v'.
struct DoubleHead {
  Word u;
  char gap;
  Word v;
};

DoubleHead join_heads(const Word& w) {
  const Word u = w.substr(0, kSigmaHeadRadius);
  Word rest = w.substr(kSigmaHeadRadius + 1);
  const std::size_t j = rest.find(kHeadDigit);
  rest.erase(j, 1);
  return {u, static_cast<char>('0' + j), rest};
}

bool in_u2(const Word& w) {
  if (w.size() != kSigmaLength || count_heads(w) != 2 || w[kSigmaHeadRadius] != kHeadDigit) {
    return false;
  }
  const std::size_t second = w.find(kHeadDigit, kSigmaHeadRadius + 1);
  return second >= kSigmaHeadRadius + 1 && second <= kSigmaHeadRadius + 3;
}

Word sigma_pi(const Word& w) {
  if (w.size() == kSigmaLength && count_heads(w) == 1 && w[kSigmaHeadRadius + 1] == kHeadDigit) {
    return split_head(w, kSigmaHeadRadius);
  }
  if (in_u2(w)) {
    const DoubleHead d = join_heads(w);
    return d.u + d.gap + kHeadDigit + d.v;
  }
  throw Error(Errc::IllFormedSpec, "word outside the head-shift family: " + w);
}

Word sigma_tau(const Word& w) {
  if (w.size() == kSigmaLength && count_heads(w) == 1 && w[kSigmaHeadRadius] == kHeadDigit) {
    return split_head(w, kSigmaHeadRadius + 1);
  }
  if (in_u2(w)) {
    const DoubleHead d = join_heads(w);
    return d.u + kHeadDigit + d.gap + d.v;
  }
  throw Error(Errc::IllFormedSpec, "word outside the head-shift family: " + w);
}

Word head_pattern_word(std::size_t length, const std::vector<std::size_t>& offsets) {
  Word w(length, '0');
  for (std::size_t o : offsets) w[o] = kHeadDigit;
  return w;
}

bool boundary_equivalent(const Word& a, const Word& b, std::size_t ell) {
  if (a.size() != b.size() || ell > a.size()) return false;
  const std::size_t k = a.size();
  return a.compare(0, ell, b, 0, ell) == 0 && a.compare(k - ell, ell, b, k - ell, ell) == 0;
}

// Site selection on a spec already known to be valid.
std::vector<Position> chi_sites_unchecked(const Config& x, const SafeRewriteSpec& spec) {
  const std::vector<Position> u_occ = occurrences(x, spec.U);
  if (u_occ.empty()) return {};
  const std::vector<Position> v_occ = occurrences(x, spec.V);
  const Position ell = spec.resolved_ell();
  const Position m = spec.resolved_m_rad();
  const Position inner = static_cast<Position>(spec.k - spec.h);
  std::vector<Position> out;
  for (std::size_t idx = 0; idx < u_occ.size(); ++idx) {
    const Position i = u_occ[idx];
    if (idx > 0 && u_occ[idx - 1] >= saturating_sub(i, m)) continue;
    if (idx + 1 < u_occ.size() && u_occ[idx + 1] <= saturating_add(i, m)) continue;
    auto it = std::lower_bound(v_occ.begin(), v_occ.end(), saturating_sub(i, ell));
    if (it != v_occ.end() && *it < i) continue;
    it = std::lower_bound(v_occ.begin(), v_occ.end(), i + inner + 1);
    if (it != v_occ.end() && *it <= saturating_add(i, ell)) continue;
    out.push_back(i);
  }
  return out;
}

Config apply_unchecked(const Config& x, const SafeRewriteSpec& spec) {
  const std::vector<Position> sites = chi_sites_unchecked(x, spec);
  if (sites.empty()) return x;
  const DenseView view(x, spec.k);
  Config out = x;
  for (Position i : sites) {
    const Word replacement = spec.pi.apply(view.read(i, spec.k));
    for (std::size_t j = 0; j < spec.k; ++j) {
      out.set(i + static_cast<Position>(j), static_cast<Symbol>(replacement[j] - '0'));
    }
  }
  return out;
}

SafeRewriteSpec make_sigma_spec(WordSet U, MapKind map) {
  SafeRewriteSpec spec;
  spec.k = kSigmaLength;
  spec.h = 1;
  spec.U = std::move(U);
  spec.V = WordSet::explicit_words({"3"});
  spec.pi.kind = map;
  validate_spec(spec);
  return spec;
}

}  // namespace

WordSet WordSet::explicit_words(std::set<Word> words) {
  WordSet ws;
  ws.kind = WordSetKind::Explicit;
  ws.length = words.empty() ? 0 : words.begin()->size();
  ws.words = std::move(words);
  return ws;
}

WordSet WordSet::sigma3_pi() {
  WordSet ws;
  ws.kind = WordSetKind::Sigma3Pi;
  ws.length = kSigmaLength;
  return ws;
}

WordSet WordSet::sigma3_tau() {
  WordSet ws;
  ws.kind = WordSetKind::Sigma3Tau;
  ws.length = kSigmaLength;
  return ws;
}

WordSet WordSet::nonzero(std::size_t n) {
  WordSet ws;
  ws.kind = WordSetKind::NonzeroN;
  ws.length = n;
  return ws;
}

std::vector<std::vector<std::size_t>> WordSet::head_patterns() const {
  constexpr std::size_t m = kSigmaHeadRadius;
  std::vector<std::vector<std::size_t>> out;
  switch (kind) {
    case WordSetKind::Sigma3Pi: out.push_back({m + 1}); break;
    case WordSetKind::Sigma3Tau: out.push_back({m}); break;
    default: return out;
  }
  for (std::size_t j = 0; j < 3; ++j) out.push_back({m, m + 1 + j});
  return out;
}

bool WordSet::contains(std::string_view w) const {
  if (w.size() != length || !valid_digits(w)) return false;
  switch (kind) {
    case WordSetKind::Explicit: return words.count(Word(w)) > 0;
    case WordSetKind::NonzeroN: return has_nonzero(w);
    case WordSetKind::Sigma3Pi:
    case WordSetKind::Sigma3Tau: {
      std::vector<std::size_t> offsets;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] == kHeadDigit) offsets.push_back(j);
      }
      const auto patterns = head_patterns();
      return std::find(patterns.begin(), patterns.end(), offsets) != patterns.end();
    }
  }
  return false;
}

Word RewriteMap::apply(const Word& w) const {
  switch (kind) {
    case MapKind::Sigma3Pi: return sigma_pi(w);
    case MapKind::Sigma3Tau: return sigma_tau(w);
    case MapKind::Explicit: {
      const auto it = pairs.find(w);
      return it == pairs.end() ? w : it->second;
    }
  }
  return w;
}

RewriteMap RewriteMap::inverse() const {
  if (kind != MapKind::Explicit) return *this;  // both head-family maps are involutions
  RewriteMap inv;
  for (const auto& [src, dst] : pairs) inv.pairs[dst] = src;
  return inv;
}

RewriteMap compose(const RewriteMap& outer, const RewriteMap& inner) {
  if (outer.kind != MapKind::Explicit || inner.kind != MapKind::Explicit) {
    throw Error(Errc::IllFormedSpec, "composition is defined for explicit maps only");
  }
  std::set<Word> domain;
  for (const auto& [src, dst] : inner.pairs) domain.insert(src);
  for (const auto& [src, dst] : outer.pairs) domain.insert(src);
  RewriteMap out;
  for (const Word& w : domain) {
    Word image = outer.apply(inner.apply(w));
    if (image != w) out.pairs[w] = std::move(image);
  }
  return out;
}

StrictParams strict_params(std::size_t k, std::size_t h) {
  StrictParams p;
  Position pow = 1;
  for (std::size_t i = 0; i < h; ++i) {
    if (__builtin_mul_overflow(pow, Position{4}, &pow)) {
      pow = std::numeric_limits<Position>::max();
      p.saturated = true;
      break;
    }
  }
  const Position two_k = saturating_add(static_cast<Position>(k), static_cast<Position>(k));
  // The marker window must also cover every cell a new U-occurrence next to
  // the rewritten block could read, i.e. [i - k, i + 2k).
  p.ell = std::max(saturating_add(pow, 1), saturating_add(two_k, static_cast<Position>(h)));
  p.m_rad = saturating_add(saturating_add(p.ell, two_k), static_cast<Position>(h));
  if (p.m_rad == std::numeric_limits<Position>::max() ||
      p.ell == std::numeric_limits<Position>::max()) {
    p.saturated = true;
  }
  return p;
}

Position SafeRewriteSpec::resolved_ell() const {
  return ell ? *ell : strict_params(k, h).ell;
}

Position SafeRewriteSpec::resolved_m_rad() const {
  if (m_rad) return *m_rad;
  if (!ell) return strict_params(k, h).m_rad;
  const Position two_k = saturating_add(static_cast<Position>(k), static_cast<Position>(k));
  return saturating_add(saturating_add(*ell, two_k), static_cast<Position>(h));
}

SafeRewriteSpec SafeRewriteSpec::with_map(RewriteMap m) const {
  SafeRewriteSpec out = *this;
  out.pi = std::move(m);
  return out;
}

void validate_spec(const SafeRewriteSpec& spec) {
  auto fail = [](const std::string& why) { throw Error(Errc::IllFormedSpec, why); };
  if (spec.h < 1 || spec.k < spec.h) fail("need k >= h >= 1");
  if (spec.U.length != spec.k) fail("U word length differs from k");
  if (spec.V.length != spec.h) fail("V word length differs from h");

  if (spec.U.kind == WordSetKind::NonzeroN) fail("U cannot be the family of all nonzero words");
  if (spec.U.kind == WordSetKind::Explicit) {
    if (spec.U.words.empty()) fail("U is empty");
    for (const Word& u : spec.U.words) {
      if (u.size() != spec.k || !valid_digits(u)) fail("malformed U word: " + u);
      if (!has_nonzero(u)) throw Error(Errc::IllFormedWordSet, "U contains the all-zero word");
    }
  }
  if (spec.V.kind == WordSetKind::Sigma3Pi || spec.V.kind == WordSetKind::Sigma3Tau) {
    fail("V must be explicit or the nonzero family");
  }
  if (spec.V.kind == WordSetKind::Explicit) {
    if (spec.V.words.empty()) fail("V is empty");
    for (const Word& v : spec.V.words) {
      if (v.size() != spec.h || !valid_digits(v)) fail("malformed V word: " + v);
      if (!has_nonzero(v)) throw Error(Errc::IllFormedWordSet, "V contains the all-zero word");
    }
  }

  const bool map_matches =
      (spec.pi.kind == MapKind::Explicit && spec.U.kind == WordSetKind::Explicit) ||
      (spec.pi.kind == MapKind::Sigma3Pi && spec.U.kind == WordSetKind::Sigma3Pi) ||
      (spec.pi.kind == MapKind::Sigma3Tau && spec.U.kind == WordSetKind::Sigma3Tau);
  if (!map_matches) fail("rewrite map does not match the word set U");
  if (spec.pi.kind == MapKind::Explicit) {
    std::set<Word> sources;
    std::set<Word> targets;
    for (const auto& [src, dst] : spec.pi.pairs) {
      if (!spec.U.words.count(src) || !spec.U.words.count(dst)) {
        fail("map pair leaves U: " + src + " -> " + dst);
      }
      if (!targets.insert(dst).second) fail("map is not injective at " + dst);
      sources.insert(src);
      if (!boundary_equivalent(src, dst, spec.h - 1)) {
        fail("map pair is not (h-1)-boundary-equivalent: " + src + " -> " + dst);
      }
    }
    if (sources != targets) fail("map is not a permutation of U");
  }

  // Every U-word must contain a V-word.
  if (spec.V.kind == WordSetKind::Explicit && spec.U.kind == WordSetKind::Explicit) {
    for (const Word& u : spec.U.words) {
      bool found = false;
      for (std::size_t j = 0; j + spec.h <= u.size() && !found; ++j) {
        found = spec.V.words.count(u.substr(j, spec.h)) > 0;
      }
      if (!found) fail("U word contains no V word: " + u);
    }
  } else if (spec.V.kind == WordSetKind::Explicit) {
    if (spec.V.words != std::set<Word>{"3"}) fail("head families require V = {3}");
  }

  const Position ell = spec.resolved_ell();
  const Position m = spec.resolved_m_rad();
  if (ell <= 0 || m <= 0) fail("radii must be positive");
  if (m < static_cast<Position>(spec.k)) fail("m_rad must be at least k");
  if (spec.mode == RadiusMode::Relaxed) return;

  const StrictParams strict = strict_params(spec.k, spec.h);
  if (ell < strict.ell) fail("ell below the strict bound max(4^h + 1, 2k + h)");
  const Position two_k = saturating_add(static_cast<Position>(spec.k), static_cast<Position>(spec.k));
  if (m < saturating_add(saturating_add(ell, two_k), static_cast<Position>(spec.h))) {
    fail("m_rad below the strict bound ell + 2k + h");
  }

  std::optional<SafetyViolation> violation;
  if (spec.V.kind == WordSetKind::Explicit && spec.V.words == std::set<Word>{"3"}) {
    if (spec.U.kind == WordSetKind::Explicit) {
      if (spec.k % 3 != 0) fail("head-marker certificate needs k divisible by 3");
      violation = validate_sufficient_safety(spec.U.words, kHead, spec.k / 3);
    } else {
      violation = validate_sufficient_safety(spec.U);
    }
  } else if (spec.V.kind == WordSetKind::NonzeroN && spec.U.kind == WordSetKind::Explicit &&
             spec.k == 3 * spec.h) {
    violation = validate_zero_padded(spec.U.words, spec.h);
  } else {
    fail("no safety certificate applies to this (U, V) in strict mode");
  }
  if (violation) {
    fail("U is not certified safe (" + violation->reason + ": " + violation->first + ", " +
         violation->second + ")");
  }
}

std::vector<Position> occurrences(const Config& x, const WordSet& W) {
  switch (W.kind) {
    case WordSetKind::Explicit:
      for (const Word& w : W.words) {
        if (!has_nonzero(w)) throw Error(Errc::IllFormedWordSet, "word set contains a zero word");
      }
      return explicit_occurrences(x, W);
    case WordSetKind::NonzeroN: return nonzero_occurrences(x, W.length);
    case WordSetKind::Sigma3Pi:
    case WordSetKind::Sigma3Tau: return pattern_occurrences(x, W);
  }
  return {};
}

std::vector<Position> chi_sites(const Config& x, const SafeRewriteSpec& spec) {
  validate_spec(spec);
  return chi_sites_unchecked(x, spec);
}

Config apply_safe_rewrite(const Config& x, const SafeRewriteSpec& spec) {
  validate_spec(spec);
  return apply_unchecked(x, spec);
}

std::optional<SafetyViolation> validate_sufficient_safety(const std::set<Word>& U, Symbol s,
                                                          std::size_t k3) {
  const char head = static_cast<char>('0' + s);
  std::map<std::size_t, Word> leftmost_by_count;
  for (const Word& u : U) {
    if (u.size() != 3 * k3) return SafetyViolation{u, u, "word length is not 3*k3"};
    std::size_t count = 0;
    std::size_t leftmost = u.size();
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] != head) continue;
      if (j < k3 || j >= 2 * k3) return SafetyViolation{u, u, "head outside the middle third"};
      ++count;
      leftmost = std::min(leftmost, j);
    }
    if (count == 0) return SafetyViolation{u, u, "word contains no head"};
    const auto [it, inserted] = leftmost_by_count.emplace(count, u);
    if (!inserted && it->second.find(head) != leftmost) {
      return SafetyViolation{it->second, u, "equal head counts with different leftmost heads"};
    }
  }
  return std::nullopt;
}

std::optional<SafetyViolation> validate_sufficient_safety(const WordSet& U) {
  if (U.kind == WordSetKind::Explicit) {
    if (U.length % 3 != 0) return SafetyViolation{"", "", "word length is not divisible by 3"};
    return validate_sufficient_safety(U.words, kHead, U.length / 3);
  }
  if (U.kind == WordSetKind::NonzeroN) {
    return SafetyViolation{"", "", "the nonzero family is not a head family"};
  }
  if (U.length % 3 != 0) return SafetyViolation{"", "", "word length is not divisible by 3"};
  std::set<Word> representatives;
  for (const auto& pattern : U.head_patterns()) {
    representatives.insert(head_pattern_word(U.length, pattern));
  }
  return validate_sufficient_safety(representatives, kHead, U.length / 3);
}

std::optional<SafetyViolation> validate_zero_padded(const std::set<Word>& U, std::size_t n) {
  std::map<Word, std::pair<std::size_t, Word>> offset_by_core;
  for (const Word& u : U) {
    if (u.size() != 3 * n) return SafetyViolation{u, u, "word length is not 3n"};
    if (!has_nonzero(u)) return SafetyViolation{u, u, "all-zero word"};
    const std::size_t first = u.find_first_not_of('0');
    const std::size_t last = u.find_last_not_of('0');
    if (first < n || last >= 2 * n) return SafetyViolation{u, u, "word is not zero-padded"};
    const Word core = u.substr(first, last - first + 1);
    const auto [it, inserted] = offset_by_core.emplace(core, std::make_pair(first, u));
    if (!inserted && it->second.first != first) {
      return SafetyViolation{it->second.second, u, "same core at two offsets"};
    }
  }
  return std::nullopt;
}

const SafeRewriteSpec& sigma3_pi_spec() {
  static const SafeRewriteSpec spec = make_sigma_spec(WordSet::sigma3_pi(), MapKind::Sigma3Pi);
  return spec;
}

const SafeRewriteSpec& sigma3_tau_spec() {
  static const SafeRewriteSpec spec = make_sigma_spec(WordSet::sigma3_tau(), MapKind::Sigma3Tau);
  return spec;
}

Config head_shift_once(const Config& x, int direction) {
  if (direction == 1) return apply_unchecked(apply_unchecked(x, sigma3_tau_spec()), sigma3_pi_spec());
  if (direction == -1) return apply_unchecked(apply_unchecked(x, sigma3_pi_spec()), sigma3_tau_spec());
  throw Error(Errc::IllFormedInstruction, "head shift direction must be +1 or -1");
}

}  // namespace rca
