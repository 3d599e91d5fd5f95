#include "rca/permbuild.hpp"

#include <algorithm>
#include <set>

namespace rca {

namespace {

bool is_track_word(const Word& w, std::size_t length) {
  return w.size() == length &&
         std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '2'; });
}

// Lexicographic successor over {0,1,2}; false on wraparound.
bool next_word(Word& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < '2') {
      ++w[i];
      return true;
    }
    w[i] = '0';
  }
  return false;
}

}  // namespace

WordPerm::WordPerm(std::size_t length, std::map<Word, Word> moved) : length_(length) {
  std::set<Word> targets;
  for (auto& [src, dst] : moved) {
    if (!is_track_word(src, length) || !is_track_word(dst, length)) {
      throw Error(Errc::IllFormedInstruction, "word permutation entry is not in A^" +
                                                  std::to_string(length) + ": " + src + " -> " +
                                                  dst);
    }
    if (src == dst) continue;
    if (!targets.insert(dst).second) throw Error(Errc::DuplicateTarget, "duplicate image " + dst);
    moved_.emplace(src, dst);
  }
  for (const Word& t : targets) {
    if (!moved_.count(t)) {
      throw Error(Errc::IllFormedInstruction, "moved pairs are not closed under the map: " + t);
    }
  }
}

Word WordPerm::operator()(const Word& w) const {
  const auto it = moved_.find(w);
  return it == moved_.end() ? w : it->second;
}

WordPerm WordPerm::inverse() const {
  std::map<Word, Word> inv;
  for (const auto& [src, dst] : moved_) inv.emplace(dst, src);
  return WordPerm(length_, std::move(inv));
}

WordPerm compose(const WordPerm& outer, const WordPerm& inner) {
  if (outer.length() != inner.length()) {
    throw Error(Errc::LengthMismatch, "composing word permutations of different lengths");
  }
  std::set<Word> domain;
  for (const auto& [src, dst] : outer.moved()) domain.insert(src);
  for (const auto& [src, dst] : inner.moved()) domain.insert(src);
  std::map<Word, Word> out;
  for (const Word& w : domain) {
    Word image = outer(inner(w));
    if (image != w) out.emplace(w, std::move(image));
  }
  return WordPerm(outer.length(), std::move(out));
}

Parity parity(const WordPerm& wp) {
  std::set<Word> seen;
  std::size_t transpositions = 0;
  for (const auto& [start, unused] : wp.moved()) {
    if (seen.count(start)) continue;
    std::size_t len = 0;
    Word w = start;
    do {
      seen.insert(w);
      w = wp(w);
      ++len;
    } while (w != start);
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

WordPerm complete_partial_injection(const std::vector<WordPair>& pairs, std::size_t length) {
  std::map<Word, Word> forward;
  std::set<Word> targets;
  for (const auto& [src, dst] : pairs) {
    if (!is_track_word(src, length) || !is_track_word(dst, length)) {
      throw Error(Errc::IllFormedInstruction, "pair is not in A^" + std::to_string(length));
    }
    if (!forward.emplace(src, dst).second) throw Error(Errc::DuplicateSource, "source " + src);
    if (!targets.insert(dst).second) throw Error(Errc::DuplicateTarget, "target " + dst);
  }
  std::map<Word, Word> moved;
  for (const auto& [src, dst] : forward) {
    if (src != dst) moved.emplace(src, dst);
  }
  // Close every maximal chain s0 -> s1 -> ... -> sn (sn not a source) by sn -> s0.
  std::map<Word, Word> closing;
  for (const auto& [src, dst] : moved) {
    if (targets.count(src)) continue;  // not a chain start
    Word end = dst;
    while (moved.count(end)) end = moved.at(end);
    closing.emplace(end, src);
  }
  moved.merge(closing);
  return WordPerm(length, std::move(moved));
}

WordPerm make_even(const WordPerm& wp) {
  if (parity(wp) == Parity::Even) return wp;
  std::vector<Word> untouched;
  Word w(wp.length(), '0');
  bool more = wp.length() > 0;
  if (wp.length() == 0) {
    throw Error(Errc::NoRoom, "no words of length 0 to fix parity");
  }
  do {
    if (!wp.moved().count(w)) untouched.push_back(w);
    if (untouched.size() == 2) break;
    more = next_word(w);
  } while (more);
  if (untouched.size() < 2) throw Error(Errc::NoRoom, "fewer than two untouched words");
  const WordPerm swap(wp.length(), {{untouched[0], untouched[1]}, {untouched[1], untouched[0]}});
  return compose(wp, swap);
}

WordPerm build_mapping_perm(const std::vector<WordPair>& pairs, std::size_t length) {
  return make_even(complete_partial_injection(pairs, length));
}

Config g0_apply(const Config& y, const G0Word& w) {
  if (!head_positions(y).empty()) {
    throw Error(Errc::HeadSymbolPresent, "machine layer acts on configurations over {0,1,2}");
  }
  Config x = y;
  for (const G0Step& step : w) {
    if (const auto* s = std::get_if<G0Shift>(&step)) {
      x = shift(x, s->e);
      continue;
    }
    const auto& local = std::get<G0Local>(step);
    const std::size_t len = local.wp.length();
    if (len == 0) continue;
    const Position hi = checked_add(local.lo, static_cast<Position>(len) - 1);
    const Word image = local.wp(x.window(local.lo, hi));
    for (std::size_t j = 0; j < len; ++j) {
      x.set(local.lo + static_cast<Position>(j), static_cast<Symbol>(image[j] - '0'));
    }
  }
  return x;
}

std::int64_t g0_psi(const G0Word& w) {
  std::int64_t total = 0;
  for (const G0Step& step : w) {
    if (const auto* s = std::get_if<G0Shift>(&step)) total = checked_add(total, s->e);
  }
  return total;
}

G0Word g0_translate(const G0Word& w, Position n) {
  G0Word out = w;
  for (G0Step& step : out) {
    if (auto* local = std::get_if<G0Local>(&step)) local->lo = checked_sub(local->lo, n);
  }
  return out;
}

}  // namespace rca
