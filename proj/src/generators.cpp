#include "rca/generators.hpp"

#include <cstdlib>

namespace rca {

namespace {

Config apply_particle(const Config& x, std::int64_t e) {
  if (e == 0) return x;
  Tracks t = tracks(x);
  for (Position& p : t.particles) p = checked_sub(p, e);
  return from_tracks(t.particles, t.walls);
}

Config apply_symbol_perm(const Config& x, const Perm4& p) {
  std::map<Position, Symbol> cells;
  for (const auto& [pos, s] : x.cells()) cells.emplace(pos, p(s));
  return Config(cells);
}

Config apply_head_local(const Config& x, const HeadLocal& hl) {
  const std::vector<Position> heads = head_positions(x);
  const Position r = hl.r;
  const Position isolation = 2 * r + 3;
  Config out = x;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    const Position q = heads[i];
    if (i > 0 && q - heads[i - 1] < isolation) continue;
    if (i + 1 < heads.size() && heads[i + 1] - q < isolation) continue;
    const Word window = x.window(checked_sub(q, r), q - 1) + x.window(q + 1, checked_add(q, r));
    const Word image = hl.wp(window);
    if (image == window) continue;
    for (Position j = 0; j < r; ++j) {
      out.set(q - r + j, static_cast<Symbol>(image[static_cast<std::size_t>(j)] - '0'));
      out.set(q + 1 + j, static_cast<Symbol>(image[static_cast<std::size_t>(r + j)] - '0'));
    }
  }
  return out;
}

Config apply_head_shift(const Config& x, std::int64_t e) {
  Config out = x;
  const int direction = e > 0 ? 1 : -1;
  for (std::int64_t i = 0; i < std::llabs(e); ++i) {
    if (head_positions(out).empty()) break;  // every step fixes head-free points
    out = head_shift_once(out, direction);
  }
  return out;
}

}  // namespace

void validate_instruction(const Instruction& ins) {
  if (const auto* hl = std::get_if<HeadLocal>(&ins)) {
    if (hl->r < 1) throw Error(Errc::IllFormedInstruction, "head-local radius must be positive");
    if (hl->wp.length() != static_cast<std::size_t>(2 * hl->r)) {
      throw Error(Errc::IllFormedInstruction, "head-local permutation must act on A^(2r)");
    }
  } else if (const auto* sr = std::get_if<SafeRewrite>(&ins)) {
    validate_spec(sr->spec);
  }
}

Config apply_instruction(const Config& x, const Instruction& ins) {
  validate_instruction(ins);
  return std::visit(
      [&x](const auto& op) -> Config {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Particle>) {
          return apply_particle(x, op.e);
        } else if constexpr (std::is_same_v<T, SymbolPerm>) {
          return apply_symbol_perm(x, op.p);
        } else if constexpr (std::is_same_v<T, HeadLocal>) {
          return apply_head_local(x, op);
        } else if constexpr (std::is_same_v<T, HeadShift>) {
          return apply_head_shift(x, op.e);
        } else {
          return apply_safe_rewrite(x, op.spec);
        }
      },
      ins);
}

std::vector<Config> apply_instruction(const std::vector<Config>& xs, const Instruction& ins) {
  std::vector<Config> out;
  out.reserve(xs.size());
  for (const Config& x : xs) out.push_back(apply_instruction(x, ins));
  return out;
}

Config apply_word(const Config& x, const TransportWord& w) {
  Config out = x;
  for (const Instruction& ins : w) out = apply_instruction(out, ins);
  return out;
}

std::vector<Config> apply_word(const std::vector<Config>& xs, const TransportWord& w) {
  std::vector<Config> out = xs;
  for (const Instruction& ins : w) out = apply_instruction(out, ins);
  return out;
}

TupleK apply_word(const TupleK& t, const TransportWord& w) {
  return TupleK::validate(apply_word(t.components(), w));
}

Instruction invert_instruction(const Instruction& ins) {
  return std::visit(
      [](const auto& op) -> Instruction {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Particle>) {
          return Particle{-op.e};
        } else if constexpr (std::is_same_v<T, SymbolPerm>) {
          return SymbolPerm{op.p.inverse()};
        } else if constexpr (std::is_same_v<T, HeadLocal>) {
          return HeadLocal{op.r, op.wp.inverse()};
        } else if constexpr (std::is_same_v<T, HeadShift>) {
          return HeadShift{-op.e};
        } else {
          return SafeRewrite{op.spec.inverse()};
        }
      },
      ins);
}

TransportWord invert_word(const TransportWord& w) {
  TransportWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(invert_instruction(*it));
  return out;
}

std::string instruction_tag(const Instruction& ins) {
  static const char* const kTags[] = {"P", "SYM", "HL", "HS", "SR"};
  return kTags[ins.index()];
}

std::map<std::string, std::size_t> size_report(const TransportWord& w) {
  std::map<std::string, std::size_t> out;
  for (const Instruction& ins : w) ++out[instruction_tag(ins)];
  return out;
}

bool relaxed_replay_check(const SafeRewrite& ins, const std::vector<Config>& samples) {
  const SafeRewriteSpec inverse = ins.spec.inverse();
  for (const Config& x : samples) {
    const Config y = apply_safe_rewrite(x, ins.spec);
    if (chi_sites(y, ins.spec) != chi_sites(x, ins.spec)) return false;
    if (apply_safe_rewrite(y, inverse) != x) return false;
  }
  return true;
}

}  // namespace rca
