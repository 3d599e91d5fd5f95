#include "rca/analysis.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <optional>
#include <random>

namespace rca {

namespace {

constexpr std::size_t kMaxPoints = 8;
constexpr std::size_t kMaxGroup = 40320;  // 8!

using PointPerm = std::vector<std::uint8_t>;
using GroupSet = std::bitset<kMaxGroup>;

PointPerm compose(const PointPerm& f, const PointPerm& g) {
  PointPerm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

PointPerm materialize(const CycleSpec& cs) {
  PointPerm sigma;
  for (const auto& [len, count] : cs.counts) {
    for (std::size_t c = 0; c < count; ++c) {
      const auto base = static_cast<std::uint8_t>(sigma.size());
      for (std::size_t j = 0; j < len; ++j) {
        sigma.push_back(static_cast<std::uint8_t>(base + (j + 1) % len));
      }
    }
  }
  return sigma;
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<CycleSpec>& out) {
  if (n == 0) {
    out.push_back(CycleSpec::from_lengths(cur));
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

Position shift_amount(const Config& x, const Config& image) {
  return x.min_position() - image.min_position();
}

}  // namespace

CycleSpec CycleSpec::from_lengths(const std::vector<std::size_t>& lengths) {
  CycleSpec cs;
  for (std::size_t len : lengths) {
    if (len == 0) throw Error(Errc::Parse, "cycle lengths must be positive");
    ++cs.counts[len];
  }
  if (cs.counts.empty()) throw Error(Errc::Parse, "a cycle spec needs at least one cycle");
  return cs;
}

std::size_t CycleSpec::total_points() const {
  std::size_t n = 0;
  for (const auto& [len, count] : counts) n += len * count;
  return n;
}

std::size_t CycleSpec::c(std::size_t length) const {
  const auto it = counts.find(length);
  return it == counts.end() ? 0 : it->second;
}

std::string to_string(KValue k) {
  switch (k) {
    case KValue::Bottom: return "bottom";
    case KValue::Zero: return "0";
    case KValue::Two: return "2";
  }
  return "?";
}

KValue k_of_finite(const CycleSpec& cs) {
  const std::size_t c1 = cs.c(1);
  std::size_t n = 0;
  std::size_t c = 0;
  for (const auto& [len, count] : cs.counts) {
    if (len >= 2 && count > 0) {
      ++n;
      c = count;
    }
  }
  const bool bottom = c1 == 2 || n >= 2;
  const bool zero = c1 <= 1 && (n == 0 || (n == 1 && c == 1));
  const bool two = (c1 >= 3 && n < 2) || (c1 != 2 && n == 1 && c >= 2);
  if (bottom + zero + two != 1) {
    throw Error(Errc::InternalScheduleViolation, "k(X) cases do not partition this input");
  }
  return bottom ? KValue::Bottom : zero ? KValue::Zero : KValue::Two;
}

KValue k_of_finite_bruteforce(const CycleSpec& cs) {
  const std::size_t n = cs.total_points();
  if (n > kMaxPoints) throw Error(Errc::TooLarge, "brute force is limited to 8 points");
  const PointPerm sigma = materialize(cs);

  std::vector<PointPerm> group;
  PointPerm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (compose(p, sigma) == compose(sigma, p)) group.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<PointPerm, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;

  GroupSet powers;
  PointPerm power = sigma;
  for (std::size_t i = 0; i < n; ++i) {
    powers.set(index.at(power));
    power = compose(sigma, power);
  }

  std::vector<GroupSet> centralizer(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      if (compose(group[i], group[j]) == compose(group[j], group[i])) centralizer[i].set(j);
    }
  }

  GroupSet center;
  center.set();
  for (const GroupSet& c : centralizer) center &= c;
  for (std::size_t i = group.size(); i < kMaxGroup; ++i) center.reset(i);
  if (center != powers) return KValue::Bottom;
  if (group.size() == powers.count()) return KValue::Zero;

  for (const GroupSet& c : centralizer) {
    if (c == powers) throw Error(Errc::InternalScheduleViolation, "found k(X) = 1");
  }
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      if ((centralizer[i] & centralizer[j]) == powers) return KValue::Two;
    }
  }
  throw Error(Errc::InternalScheduleViolation, "no two-element set has centralizer <sigma>");
}

std::vector<CycleSpec> cycle_specs_with_points(std::size_t n) {
  std::vector<CycleSpec> out;
  std::vector<std::size_t> cur;
  partitions(n, n, cur, out);
  return out;
}

std::vector<Config> enumerate_finite(std::size_t support_bound, std::size_t width_bound) {
  std::vector<Config> out;
  for (std::size_t width = 1; width <= width_bound; ++width) {
    std::string digits(width, '0');
    // Odometer over 0..3 with nonzero first and last digits.
    std::vector<int> d(width, 0);
    while (true) {
      if (d.front() != 0 && d.back() != 0) {
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < width; ++i) {
          digits[i] = static_cast<char>('0' + d[i]);
          nonzero += d[i] != 0;
        }
        if (nonzero <= support_bound) out.push_back(Config::from_digits(0, digits));
      }
      std::size_t i = width;
      while (i > 0 && d[i - 1] == 3) d[--i] = 0;
      if (i == 0) break;
      ++d[i - 1];
    }
  }
  return out;
}

WitnessResult find_nonshift_witness(const TransportWord& w, std::size_t support_bound,
                                    std::size_t width_bound) {
  std::optional<Position> common;
  bool consistent = true;
  for (const Config& x : enumerate_finite(support_bound, width_bound)) {
    const Config image = apply_word(x, w);
    if (image.is_zero() || !orbit_equal(image, x)) return Witness{x, image};
    const Position n = shift_amount(x, image);
    if (!common) common = n;
    consistent = consistent && *common == n;
  }
  if (consistent && common) return IsShift{*common};
  return Inconclusive{};
}

CommuteResult check_commute(const TransportWord& wa, const TransportWord& wb,
                            const std::vector<Config>& samples) {
  for (const Config& x : samples) {
    Config ab = apply_word(apply_word(x, wb), wa);
    Config ba = apply_word(apply_word(x, wa), wb);
    if (ab != ba) return CounterExample{x, std::move(ab), std::move(ba)};
  }
  return AllCommuted{};
}

std::vector<Config> commute_samples(std::uint64_t seed, std::size_t random_count,
                                    std::size_t exhaustive_width) {
  std::vector<Config> out = enumerate_finite(exhaustive_width, exhaustive_width);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> width(1, 12);
  std::uniform_int_distribution<int> symbol(0, 3);
  std::uniform_int_distribution<int> offset(-8, 8);
  while (random_count > 0) {
    std::string digits(static_cast<std::size_t>(width(rng)), '0');
    for (char& c : digits) c = static_cast<char>('0' + symbol(rng));
    Config x = Config::from_digits(offset(rng), digits);
    if (x.is_zero()) continue;
    out.push_back(std::move(x));
    --random_count;
  }
  return out;
}

}  // namespace rca
