#include "rca/transporter.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace rca {

namespace {

[[noreturn]] void schedule_violation(const std::string& what) {
  throw Error(Errc::InternalScheduleViolation, what);
}

// Smallest t >= 0 with every particle strictly left of every wall after P^t.
std::int64_t separation_steps(const std::vector<Config>& xs) {
  std::int64_t steps = 0;
  for (const Config& x : xs) {
    const Tracks t = tracks(x);
    if (t.particles.empty() || t.walls.empty()) continue;
    steps = std::max<std::int64_t>(steps, checked_add(t.particles.back() - t.walls.front(), 1));
  }
  return steps;
}

bool all_of(const std::vector<Config>& xs, bool ClassFlags::*flag) {
  return std::all_of(xs.begin(), xs.end(), [flag](const Config& x) { return classify(x).*flag; });
}

// The 2r cells around the head at q, left half first.
Word head_window(const Config& x, Position q, Position r) {
  return x.window(q - r, q - 1) + x.window(q + 1, q + r);
}

Position reach_from(const Config& x, Position q) {
  Position reach = 0;
  for (const auto& [p, s] : x.cells()) reach = std::max(reach, p > q ? p - q : q - p);
  return reach;
}

}  // namespace

std::optional<ClockReading> phi_clock(const Config& x) {
  if (x.is_zero()) throw Error(Errc::ZeroPoint, "phi of the zero point");
  const Tracks t = tracks(x);
  // P^-s moves the particle track right by s; the first s >= 1 at which some
  // particle lands on a wall is the first collision.
  Position first = std::numeric_limits<Position>::max();
  for (Position p : t.particles) {
    const auto it = std::upper_bound(t.walls.begin(), t.walls.end(), p);
    if (it != t.walls.end()) first = std::min(first, *it - p);
  }
  if (first == std::numeric_limits<Position>::max()) return std::nullopt;
  std::optional<Position> where;
  for (Position p : t.particles) {
    const Position target = p + first;
    if (std::binary_search(t.walls.begin(), t.walls.end(), target)) {
      if (where) return std::nullopt;  // two heads at once
      where = target;
    }
  }
  return ClockReading{*where, static_cast<std::uint64_t>(first - 1)};
}

Stage make_good(const TupleK& t) {
  TransportWord word;
  std::vector<Config> cur = t.components();
  auto emit = [&](Instruction ins) {
    cur = apply_instruction(cur, ins);
    word.push_back(std::move(ins));
  };
  auto separate = [&] {
    const std::int64_t steps = separation_steps(cur);
    if (steps > 0) emit(Particle{steps});
  };

  if (!all_of(cur, &ClassFlags::prepregood)) separate();
  if (!all_of(cur, &ClassFlags::pregood)) {
    emit(SymbolPerm{Perm4::transposition(kWall, kHead)});
    separate();
  }
  if (!all_of(cur, &ClassFlags::good)) {
    emit(SymbolPerm{Perm4::transposition(kParticle, kHead)});
    separate();
  }
  if (!all_of(cur, &ClassFlags::good)) schedule_violation("make_good did not reach a good tuple");
  return {std::move(word), TupleK::validate(std::move(cur))};
}

BuzzPlan first_buzz_schedule(const TupleK& good) {
  BuzzPlan plan;
  std::uint64_t max_tau = 0;
  for (std::size_t i = 0; i < good.size(); ++i) {
    if (!classify(good[i]).good) {
      throw Error(Errc::NotGood, "component " + std::to_string(i) + " is not good", i);
    }
    const std::optional<ClockReading> reading = phi_clock(good[i]);
    if (!reading) schedule_violation("good component is not clock-like");
    plan.a.push_back(reading->a);
    plan.tau.push_back(reading->t + 1);
    max_tau = std::max(max_tau, reading->t + 1);
  }
  plan.horizon = max_tau + 1;
  return plan;
}

Stage make_great(const TupleK& good) {
  const BuzzPlan plan = first_buzz_schedule(good);
  const auto horizon = static_cast<Position>(plan.horizon);
  TransportWord word;
  std::vector<Config> cur = good.components();
  auto emit = [&](Instruction ins) {
    cur = apply_instruction(cur, ins);
    word.push_back(std::move(ins));
  };

  std::map<std::uint64_t, std::vector<std::size_t>> events;
  for (std::size_t i = 0; i < plan.tau.size(); ++i) events[plan.tau[i]].push_back(i);

  Position now = 0;
  for (const auto& [tau_u, buzzing] : events) {
    const auto tau = static_cast<Position>(tau_u);
    emit(Particle{-(tau - now)});
    now = tau;

    std::vector<bool> is_buzzing(cur.size(), false);
    for (std::size_t i : buzzing) is_buzzing[i] = true;
    Position min_a = std::numeric_limits<Position>::max();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const std::vector<Position> heads = head_positions(cur[i]);
      if (!is_buzzing[i]) {
        if (!heads.empty()) schedule_violation("unplanned collision in component " + std::to_string(i));
        continue;
      }
      if (heads.size() != 1 || heads.front() != plan.a[i]) {
        schedule_violation("component " + std::to_string(i) + " did not collide as planned");
      }
      min_a = std::min(min_a, plan.a[i]);
    }

    const Position e = std::max<Position>(1, 2 - min_a);
    emit(HeadShift{e});

    // Re-arm every buzzing clock: wall at 0, a particle that reaches it at
    // the horizon, the head kept where it is and a companion particle that
    // keeps the orbits apart.
    std::vector<std::pair<std::size_t, Config>> targets;
    Position radius = 1;
    for (std::size_t i : buzzing) {
      const Position head = checked_add(plan.a[i], e);
      if (head_positions(cur[i]) != std::vector<Position>{head}) {
        schedule_violation("head shift misplaced the head of component " + std::to_string(i));
      }
      Config z;
      z.set(head, kHead);
      z.set(0, kWall);
      z.set(-(horizon - tau), kParticle);
      z.set(checked_add(head, static_cast<Position>(i) + 2), kParticle);
      radius = std::max({radius, reach_from(cur[i], head), reach_from(z, head)});
      targets.emplace_back(i, std::move(z));
    }
    std::vector<WordPair> pairs;
    for (const auto& [i, z] : targets) {
      const Position head = plan.a[i] + e;
      pairs.emplace_back(head_window(cur[i], head, radius), head_window(z, head, radius));
    }
    emit(HeadLocal{radius, build_mapping_perm(pairs, static_cast<std::size_t>(2 * radius))});
    for (const auto& [i, z] : targets) {
      if (cur[i] != z) schedule_violation("head-local rewrite missed its target");
    }
  }
  emit(Particle{-(horizon - now)});

  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (!classify(cur[i]).great) {
      schedule_violation("component " + std::to_string(i) + " is not great at the horizon");
    }
  }
  return {std::move(word), TupleK::validate(std::move(cur))};
}

TupleK canonical_great(std::size_t k) {
  std::vector<Config> out;
  for (std::size_t i = 1; i <= k; ++i) {
    Config y;
    y.set(0, kHead);
    y.set(static_cast<Position>(i), kParticle);
    out.push_back(std::move(y));
  }
  return TupleK::validate(std::move(out));
}

Stage make_canonical(const TupleK& great) {
  for (std::size_t i = 0; i < great.size(); ++i) {
    if (!classify(great[i]).great) {
      throw Error(Errc::NotGreat, "component " + std::to_string(i) + " is not great", i);
    }
  }
  const TupleK target = canonical_great(great.size());
  Position radius = static_cast<Position>(great.size());
  for (const Config& x : great) radius = std::max(radius, reach_from(x, 0));
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < great.size(); ++i) {
    pairs.emplace_back(head_window(great[i], 0, radius), head_window(target[i], 0, radius));
  }
  TransportWord word{
      HeadLocal{radius, build_mapping_perm(pairs, static_cast<std::size_t>(2 * radius))}};
  std::vector<Config> out = apply_word(great.components(), word);
  if (out != target.components()) schedule_violation("canonical rewrite missed its target");
  return {std::move(word), target};
}

Stage pipeline(const TupleK& t) {
  if (t == canonical_great(t.size())) return {{}, t};
  if (all_of(t.components(), &ClassFlags::great)) return make_canonical(t);
  Stage good = make_good(t);
  Stage great = make_great(good.tuple);
  Stage canon = make_canonical(great.tuple);
  TransportWord word = std::move(good.word);
  word.insert(word.end(), great.word.begin(), great.word.end());
  word.insert(word.end(), canon.word.begin(), canon.word.end());
  return {std::move(word), std::move(canon.tuple)};
}

TransportWord transport(const TupleK& src, const TupleK& dst) {
  if (src.size() != dst.size()) {
    throw Error(Errc::LengthMismatch, "source and destination tuples differ in length");
  }
  TransportWord word = pipeline(src).word;
  const TransportWord back = invert_word(pipeline(dst).word);
  word.insert(word.end(), back.begin(), back.end());
  return word;
}

bool verify(const TransportWord& w, const TupleK& src, const TupleK& dst) {
  if (src.size() != dst.size()) return false;
  try {
    return apply_word(src.components(), w) == dst.components();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace rca
