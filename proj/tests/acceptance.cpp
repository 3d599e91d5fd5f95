// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rca/analysis.hpp"
#include "rca/orbitperm.hpp"
#include "rca/reset.hpp"
#include "rca/sampling.hpp"
#include "rca/transporter.hpp"
#include "specs.hpp"

using namespace rca;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure only.
struct Check {
  Outcome& out;
  std::size_t failures = 0;
  void operator()(bool cond, const std::string& what) {
    if (cond) return;
    out.ok = false;
    if (++failures <= 5) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
};

IndexPerm random_even(Rng& rng, std::size_t k) {
  IndexPerm beta(k);
  std::iota(beta.begin(), beta.end(), 0);
  do std::shuffle(beta.begin(), beta.end(), rng);
  while (!is_even(beta));
  return beta;
}

Config sparse_heads(Rng& rng, std::size_t width, std::size_t heads) {
  std::string digits(width, '0');
  for (char& c : digits) c = static_cast<char>('0' + std::uniform_int_distribution<int>(0, 2)(rng));
  for (std::size_t i = 0; i < heads; ++i) {
    digits[std::uniform_int_distribution<std::size_t>(0, width - 1)(rng)] = '3';
  }
  return Config::from_digits(std::uniform_int_distribution<Position>(-10, 10)(rng), digits);
}

Outcome figure_one_replay() {
  Outcome o;
  Check check{o};
  const std::vector<Config> x = Cs({"@0:3", "@-1:201", "@0:22"});
  const TransportWord w = {Particle{3}, SymbolPerm{Perm4::transposition(kWall, kHead)}, Particle{2}};
  const std::vector<Config> y = apply_word(x, w);
  check(emit_tuple_text(y) == "@-5:100102\n@-4:1102\n@-2:1122\n", "rows differ: " + emit_tuple_text(y));
  for (const Config& c : y) check(classify(c).good, emit_config(c) + " is not good");
  return o;
}

Outcome end_to_end_transport() {
  Outcome o;
  Check check{o};
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 1 + static_cast<std::size_t>(i % 5);
    const TupleK src = random_tuple(rng, k, 12, 6);
    const TupleK dst = random_tuple(rng, k, 12, 6);
    check(verify(transport(src, dst), src, dst), "pair " + std::to_string(i) + " failed");
  }
  return o;
}

Outcome head_shift_law() {
  Outcome o;
  Check check{o};
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Config x = random_single_head(rng, 30, 20);
    check(apply_instruction(x, HeadShift{1}) == oracle::expected_head_step(x), emit_config(x));
  }
  return o;
}

Outcome involutions_and_inverses() {
  Outcome o;
  Check check{o};
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const Config x = i % 2 ? random_config(rng, 40, 10) : sparse_heads(rng, 60, 1 + i % 5);
    check(apply_safe_rewrite(apply_safe_rewrite(x, sigma3_pi_spec()), sigma3_pi_spec()) == x,
          "f_pi " + emit_config(x));
    check(apply_safe_rewrite(apply_safe_rewrite(x, sigma3_tau_spec()), sigma3_tau_spec()) == x,
          "f_tau " + emit_config(x));
    const std::int64_t e = 1 + i % 3;
    check(apply_word(x, {HeadShift{e}, HeadShift{-e}}) == x, "head shift " + emit_config(x));
  }
  return o;
}

Outcome chi_stability_and_homomorphism() {
  Outcome o;
  Check check{o};
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Config x = i % 3 ? sparse_heads(rng, 50, 1 + i % 4) : random_config(rng, 30, 8);
    for (const SafeRewriteSpec* s : {&sigma3_pi_spec(), &sigma3_tau_spec()}) {
      const Config y = apply_safe_rewrite(x, *s);
      check(chi_sites(y, *s) == chi_sites(x, *s), "sigma chi " + emit_config(x));
      check(apply_safe_rewrite(y, *s) == x, "sigma pi o pi " + emit_config(x));
    }
    for (const std::set<Word>& U : {std::set<Word>{"030", "031"}, a3b_words(), two_head_words()}) {
      const SafeRewriteSpec s1 = head_marker_spec(U, random_map(U, rng));
      const SafeRewriteSpec s2 = s1.with_map(RewriteMap{MapKind::Explicit, random_map(U, rng)});
      const Config y = apply_safe_rewrite(x, s2);
      check(chi_sites(y, s2) == chi_sites(x, s2), "explicit chi " + emit_config(x));
      check(apply_safe_rewrite(y, s1) == apply_safe_rewrite(x, s1.with_map(compose(s1.pi, s2.pi))),
            "explicit homomorphism " + emit_config(x));
    }
  }
  return o;
}

Outcome phi_oracle() {
  Outcome o;
  Check check{o};
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const Config x = random_config(rng, 12, 8);
    const auto r = phi_clock(x);
    const auto expected = oracle::phi_by_simulation(x);
    check(r.has_value() == expected.has_value() && (!r || (r->a == expected->a && r->t == expected->t)),
          emit_config(x));
  }
  return o;
}

Outcome reset_solver() {
  Outcome o;
  Check check{o};
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 1 + static_cast<std::size_t>(i % 6);
    ResetState v;
    std::uint64_t max_t = 0;
    for (std::size_t j = 0; j < k; ++j) {
      v.push_back({std::uniform_int_distribution<Position>(-50, 50)(rng),
                   std::uniform_int_distribution<std::uint64_t>(0, 40)(rng)});
      max_t = std::max(max_t, v.back().t);
    }
    const auto word = reset_solve_zero(v);
    check(word.size() == max_t + 1, "length");
    check(reset_fold(word, v) == ResetState(k, Clock{0, 0}), "fold");
  }
  return o;
}

Outcome k_table() {
  Outcome o;
  Check check{o};
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const CycleSpec& cs : cycle_specs_with_points(n)) {
      std::string name;
      for (const auto& [len, count] : cs.counts) name += (name.empty() ? "" : " ") + std::to_string(len) + "^" + std::to_string(count);
      check(k_of_finite(cs) == k_of_finite_bruteforce(cs), name);
    }
  }
  return o;
}

Outcome commutator_action() {
  Outcome o;
  Check check{o};
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const TupleK t = random_tuple(rng, 5, 8, 4);
    const IndexPerm beta = random_even(rng, 5);
    IndexPerm inv(5);
    for (std::size_t j = 0; j < 5; ++j) inv[beta[j]] = j;
    const Instruction ins = orbit_permutation_instruction({t, beta});
    check(apply_word(t, {ins}) == permute_tuple(t, beta), "replay " + std::to_string(i));
    check(apply_word(t, {ins, orbit_permutation_instruction({t, inv})}) == t, "inverse " + std::to_string(i));
    check(apply_word(t, {ins, invert_instruction(ins)}) == t, "inverted " + std::to_string(i));
  }
  return o;
}

Outcome even_permutation_transport() {
  Outcome o;
  Check check{o};
  Rng rng(10);
  for (int i = 0; i < 50; ++i) {
    const std::size_t k = 2 + static_cast<std::size_t>(i % 5);
    const TupleK t = random_tuple(rng, k, 12, 6);
    const TupleK target = permute_tuple(t, random_even(rng, k));
    check(verify(transport(t, target), t, target), "tuple " + std::to_string(i));
  }
  return o;
}

Outcome instruction_invariants() {
  Outcome o;
  Check check{o};
  Rng rng(11);
  const auto random_instruction = [&](int i) -> Instruction {
    switch (i % 5) {
      case 0: return Particle{i % 7 - 3};
      case 1: return SymbolPerm{Perm4::transposition(static_cast<Symbol>(1 + i % 3), kHead)};
      case 2: return HeadLocal{2, build_mapping_perm({{"0000", "1020"}, {"1111", "0120"}}, 4)};
      case 3: return HeadShift{i % 5 - 2};
      default: return SafeRewrite{head_marker_spec(a3b_words(), random_map(a3b_words(), rng))};
    }
  };
  for (int i = 0; i < 500; ++i) {
    const Instruction ins = random_instruction(i);
    const Config x = random_config(rng, 16, 8);
    const Position n = i % 11 - 5;
    check(apply_instruction(shift(x, n), ins) == shift(apply_instruction(x, ins), n),
          "shift equivariance " + emit_config(x));
    check(apply_instruction(Config{}, ins).is_zero(), "zero point");
    const Config y = apply_instruction(x, HeadLocal{2, build_mapping_perm({{"0102", "2220"}}, 4)});
    check(head_positions(y) == head_positions(x), "head count " + emit_config(x));
    const TupleK t = random_tuple(rng, 1 + i % 5, 10, 5);
    bool distinct = true;
    try {
      apply_word(t, {ins});
    } catch (const Error&) {
      distinct = false;
    }
    check(distinct, "orbit distinctness");
  }
  return o;
}

Outcome nonshift_witness() {
  Outcome o;
  Check check{o};
  for (const TransportWord& w : {TransportWord{SymbolPerm{Perm4::transposition(kParticle, kWall)}},
                                 TransportWord{Particle{1}}}) {
    const WitnessResult r = find_nonshift_witness(w, 3, 4);
    const auto* wit = std::get_if<Witness>(&r);
    check(wit != nullptr, "no witness for " + instruction_tag(w.front()));
    if (wit) {
      check(!orbit_equal(apply_word(wit->x, w), wit->x) && apply_word(wit->x, w) == wit->image,
            "witness does not verify");
    }
  }
  const Config twelve = C("@0:12");
  check(!orbit_equal(apply_word(twelve, {Particle{1}}), twelve), "@0:12 is not a witness");
  const WitnessResult id = find_nonshift_witness({}, 3, 4);
  check(std::holds_alternative<IsShift>(id) && std::get<IsShift>(id).n == 0, "empty word");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 means no limit
  };
  const std::vector<Criterion> criteria = {
      {"figure-1 mechanical replay", figure_one_replay, 1},
      {"end-to-end transport, 200 random pairs", end_to_end_transport, 60},
      {"head-shift law, 500 single-head points", head_shift_law, 5},
      {"involutions and head-shift inverses", involutions_and_inverses, 0},
      {"rewrite-site stability and homomorphism", chi_stability_and_homomorphism, 0},
      {"clock reading vs simulation, 10^4 points", phi_oracle, 10},
      {"reset solver length and fold", reset_solver, 0},
      {"k(X) formula vs brute force, <= 7 points", k_table, 30},
      {"orbit permutation instruction, k = 5", commutator_action, 0},
      {"even-permutation transport", even_permutation_transport, 0},
      {"instruction-level invariants", instruction_invariants, 0},
      {"non-shift witnesses", nonshift_witness, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && criteria[i].limit_seconds > 0 && secs >= criteria[i].limit_seconds) {
      o = {false, "over the " + std::to_string(criteria[i].limit_seconds) + " s limit"};
    }
    std::printf("%s %2zu. %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                secs, o.ok ? "" : ": ", o.detail.c_str());
    failures += !o.ok;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
