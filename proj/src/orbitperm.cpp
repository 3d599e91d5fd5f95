#include "rca/orbitperm.hpp"

#include <algorithm>

namespace rca {

namespace {

void check_perm(const IndexPerm& beta, std::size_t k) {
  if (beta.size() != k) throw Error(Errc::LengthMismatch, "permutation and tuple sizes differ");
  std::vector<bool> seen(k, false);
  for (std::size_t b : beta) {
    if (b >= k || seen[b]) throw Error(Errc::IllFormedSpec, "beta is not a permutation");
    seen[b] = true;
  }
}

}  // namespace

bool is_even(const IndexPerm& beta) {
  std::vector<bool> seen(beta.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = beta[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 0) transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

TupleK permute_tuple(const TupleK& t, const IndexPerm& beta) {
  check_perm(beta, t.size());
  std::vector<Config> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[beta[i]] = t[i];
  return TupleK::validate(std::move(out));
}

Position padding_radius(const TupleK& t) {
  Position m = 1;
  for (const Config& x : t) {
    m = std::max({m, checked_sub(0, x.min_position()), checked_add(x.max_position(), 1)});
  }
  return m;
}

Instruction orbit_permutation_instruction(const OrbitPermRequest& req) {
  const TupleK& t = req.tuple;
  if (t.size() < 5) throw Error(Errc::KTooSmall, "orbit permutations need at least 5 components");
  check_perm(req.beta, t.size());
  if (!is_even(req.beta)) throw Error(Errc::BetaOdd, "beta is an odd permutation");

  const Position m = padding_radius(t);
  std::vector<Word> w;
  for (const Config& x : t) w.push_back(x.window(-3 * m, 3 * m - 1));

  SafeRewriteSpec spec;
  spec.k = static_cast<std::size_t>(6 * m);
  spec.h = static_cast<std::size_t>(2 * m);
  spec.U = WordSet::explicit_words(std::set<Word>(w.begin(), w.end()));
  spec.V = WordSet::nonzero(spec.h);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != req.beta[i]) spec.pi.pairs[w[req.beta[i]]] = w[i];
  }
  // Distinct orbits keep the cores apart, so this cannot fire.
  if (auto v = validate_zero_padded(spec.U.words, spec.h)) {
    throw Error(Errc::ZeroPaddingViolation, v->reason);
  }
  validate_spec(spec);
  return SafeRewrite{std::move(spec)};
}

}  // namespace rca
