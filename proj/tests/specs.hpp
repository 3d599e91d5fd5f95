#pragma once

// Small explicit safe-rewrite specifications shared by tests.

#include <random>
#include <vector>

#include "rca/safety.hpp"

inline rca::SafeRewriteSpec head_marker_spec(std::set<rca::Word> U, std::map<rca::Word, rca::Word> pi) {
  rca::SafeRewriteSpec s;
  s.k = U.begin()->size();
  s.h = 1;
  s.U = rca::WordSet::explicit_words(std::move(U));
  s.V = rca::WordSet::explicit_words({"3"});
  s.pi.pairs = std::move(pi);
  return s;
}

// U = {"030", "031"}, pi swaps them.
inline rca::SafeRewriteSpec swap_spec() {
  return head_marker_spec({"030", "031"}, {{"030", "031"}, {"031", "030"}});
}

// All nine words a3b.
inline std::set<rca::Word> a3b_words() {
  std::set<rca::Word> out;
  for (char a : {'0', '1', '2'}) {
    for (char b : {'0', '1', '2'}) out.insert(std::string{a, '3', b});
  }
  return out;
}

inline std::set<rca::Word> two_head_words() {
  return {"003000", "013000", "003100", "003300", "103301", "203302"};
}

// Random permutation of U as explicit pairs, fixed points dropped.
inline std::map<rca::Word, rca::Word> random_map(const std::set<rca::Word>& U, std::mt19937_64& rng) {
  std::vector<rca::Word> src(U.begin(), U.end());
  std::vector<rca::Word> dst = src;
  std::shuffle(dst.begin(), dst.end(), rng);
  std::map<rca::Word, rca::Word> out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] != dst[i]) out[src[i]] = dst[i];
  }
  return out;
}
