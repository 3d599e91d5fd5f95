#include "rca/sampling.hpp"

#include <string>

namespace rca {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Config random_config(Rng& rng, std::size_t max_width, Position spread) {
  const std::size_t width = pick(rng, 1, max_width);
  std::string digits(width, '0');
  for (char& c : digits) c = static_cast<char>('0' + pick(rng, 0, 3));
  digits.front() = static_cast<char>('0' + pick(rng, 1, 3));
  const Position offset = std::uniform_int_distribution<Position>(-spread, spread)(rng);
  return Config::from_digits(offset, digits);
}

Config random_single_head(Rng& rng, std::size_t max_width, Position spread) {
  const std::size_t width = pick(rng, 1, max_width);
  std::string digits(width, '0');
  for (char& c : digits) c = static_cast<char>('0' + pick(rng, 0, 2));
  digits[pick(rng, 0, width - 1)] = '3';
  const Position offset = std::uniform_int_distribution<Position>(-spread, spread)(rng);
  return Config::from_digits(offset, digits);
}

TupleK random_tuple(Rng& rng, std::size_t k, std::size_t max_width, Position spread) {
  std::vector<Config> xs;
  while (xs.size() < k) {
    Config x = random_config(rng, max_width, spread);
    bool fresh = true;
    for (const Config& y : xs) fresh = fresh && !orbit_equal(x, y);
    if (fresh) xs.push_back(std::move(x));
  }
  return TupleK::validate(std::move(xs));
}

}  // namespace rca
