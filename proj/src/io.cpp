#include "rca/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rca {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    parse_error(std::string("field '") + key + "' has the wrong type");
  }
}

void expect_keys(const json& j, std::initializer_list<const char*> keys) {
  if (j.size() != keys.size()) parse_error("unexpected fields in " + j.dump());
  for (const char* k : keys) {
    if (!j.contains(k)) parse_error(std::string("missing field '") + k + "'");
  }
}

json pairs_to_json(const std::map<Word, Word>& pairs) {
  json out = json::array();
  for (const auto& [src, dst] : pairs) out.push_back(json::array({src, dst}));
  return out;
}

std::map<Word, Word> pairs_from_json(const json& j) {
  if (!j.is_array()) parse_error("map must be an array of pairs");
  std::map<Word, Word> out;
  const Word* previous = nullptr;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      parse_error("map entries must be [src, dst] string pairs");
    }
    const auto src = p[0].get<Word>();
    if (previous && !(*previous < src)) parse_error("map entries must be sorted by source");
    const auto [it, fresh] = out.emplace(src, p[1].get<Word>());
    if (!fresh) throw Error(Errc::DuplicateSource, "duplicate source " + src);
    previous = &it->first;
  }
  return out;
}

json word_set_to_json(const WordSet& ws) {
  switch (ws.kind) {
    case WordSetKind::Sigma3Pi: return "SIGMA3_PI";
    case WordSetKind::Sigma3Tau: return "SIGMA3_TAU";
    case WordSetKind::NonzeroN: return "NONZERO_N";
    case WordSetKind::Explicit: return json(ws.words);
  }
  return nullptr;
}

WordSet word_set_from_json(const json& j, std::size_t length) {
  if (j.is_string()) {
    const auto tag = j.get<std::string>();
    if (tag == "SIGMA3_PI") return WordSet::sigma3_pi();
    if (tag == "SIGMA3_TAU") return WordSet::sigma3_tau();
    if (tag == "NONZERO_N") return WordSet::nonzero(length);
    parse_error("unknown word set tag " + tag);
  }
  if (!j.is_array()) parse_error("word set must be a tag or an array of words");
  std::set<Word> words;
  std::string previous;
  for (const json& w : j) {
    if (!w.is_string()) parse_error("words must be strings");
    auto s = w.get<Word>();
    if (!words.empty() && !(previous < s)) parse_error("word sets must be sorted and unique");
    previous = s;
    words.insert(std::move(s));
  }
  WordSet ws = WordSet::explicit_words(std::move(words));
  ws.length = length;
  return ws;
}

json radius_to_json(const std::optional<Position>& r) {
  return r ? json(*r) : json("strict");
}

std::optional<Position> radius_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "strict") return std::nullopt;
  if (!j.is_number_integer()) parse_error("radius must be an integer or \"strict\"");
  return j.get<Position>();
}

json to_json(const Instruction& ins) {
  return std::visit(
      [](const auto& op) -> json {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, Particle>) {
          return {{"op", "P"}, {"e", op.e}};
        } else if constexpr (std::is_same_v<T, SymbolPerm>) {
          const auto& img = op.p.images();
          return {{"op", "SYM"}, {"img", json::array({img[0], img[1], img[2], img[3]})}};
        } else if constexpr (std::is_same_v<T, HeadLocal>) {
          return {{"op", "HL"}, {"r", op.r}, {"map", pairs_to_json(op.wp.moved())}};
        } else if constexpr (std::is_same_v<T, HeadShift>) {
          return {{"op", "HS"}, {"e", op.e}};
        } else {
          const SafeRewriteSpec& s = op.spec;
          json map;
          switch (s.pi.kind) {
            case MapKind::Sigma3Pi: map = "SIGMA3_PI"; break;
            case MapKind::Sigma3Tau: map = "SIGMA3_TAU"; break;
            case MapKind::Explicit: map = pairs_to_json(s.pi.pairs); break;
          }
          return {{"op", "SR"},
                  {"k", s.k},
                  {"h", s.h},
                  {"U", word_set_to_json(s.U)},
                  {"V", word_set_to_json(s.V)},
                  {"map", map},
                  {"ell", radius_to_json(s.ell)},
                  {"mrad", radius_to_json(s.m_rad)},
                  {"mode", s.mode == RadiusMode::Strict ? "strict" : "relaxed"}};
        }
      },
      ins);
}

Instruction from_json(const json& j) {
  if (!j.is_object()) parse_error("instructions must be JSON objects");
  const auto op = get_field<std::string>(j, "op");
  if (op == "P" || op == "HS") {
    expect_keys(j, {"op", "e"});
    const auto e = get_field<std::int64_t>(j, "e");
    return op == "P" ? Instruction{Particle{e}} : Instruction{HeadShift{e}};
  }
  if (op == "SYM") {
    expect_keys(j, {"op", "img"});
    const auto img = get_field<std::vector<int>>(j, "img");
    if (img.size() != 4) parse_error("SYM needs four images");
    std::array<Symbol, 4> a{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (img[i] < 0 || img[i] > 3) parse_error("SYM images must lie in 0..3");
      a[i] = static_cast<Symbol>(img[i]);
    }
    return SymbolPerm{Perm4(a)};
  }
  if (op == "HL") {
    expect_keys(j, {"op", "r", "map"});
    const auto r = get_field<std::int64_t>(j, "r");
    if (r < 1) throw Error(Errc::IllFormedInstruction, "head-local radius must be positive");
    HeadLocal hl{r, WordPerm(static_cast<std::size_t>(2 * r), pairs_from_json(j.at("map")))};
    if (hl.wp.moved().size() != j.at("map").size()) {
      throw Error(Errc::IllFormedInstruction, "head-local map lists a fixed word");
    }
    return hl;
  }
  if (op == "SR") {
    expect_keys(j, {"op", "k", "h", "U", "V", "map", "ell", "mrad", "mode"});
    SafeRewriteSpec s;
    s.k = get_field<std::size_t>(j, "k");
    s.h = get_field<std::size_t>(j, "h");
    s.U = word_set_from_json(j.at("U"), s.k);
    s.V = word_set_from_json(j.at("V"), s.h);
    const json& map = j.at("map");
    if (map.is_string()) {
      const auto tag = map.get<std::string>();
      if (tag == "SIGMA3_PI") {
        s.pi.kind = MapKind::Sigma3Pi;
      } else if (tag == "SIGMA3_TAU") {
        s.pi.kind = MapKind::Sigma3Tau;
      } else {
        parse_error("unknown map tag " + tag);
      }
    } else {
      s.pi.pairs = pairs_from_json(map);
    }
    s.ell = radius_from_json(j.at("ell"));
    s.m_rad = radius_from_json(j.at("mrad"));
    const auto mode = get_field<std::string>(j, "mode");
    if (mode == "strict") {
      s.mode = RadiusMode::Strict;
    } else if (mode == "relaxed") {
      s.mode = RadiusMode::Relaxed;
    } else {
      parse_error("mode must be strict or relaxed");
    }
    validate_spec(s);
    return SafeRewrite{std::move(s)};
  }
  parse_error("unknown op " + op);
}

}  // namespace

Config parse_config(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "ZERO") return Config{};
  if (t.empty() || t.front() != '@') parse_error("expected '@<offset>:<digits>' or ZERO");
  const auto colon = t.find(':');
  if (colon == std::string_view::npos) parse_error("missing ':' in point");
  const std::string_view num = t.substr(1, colon - 1);
  Position offset = 0;
  const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), offset);
  if (num.empty() || ec != std::errc{} || end != num.data() + num.size()) {
    parse_error("bad offset '" + std::string(num) + "'");
  }
  const std::string_view digits = t.substr(colon + 1);
  if (digits.empty()) parse_error("empty digit string");
  return Config::from_digits(offset, digits);
}

std::string emit_config(const Config& x) {
  if (x.is_zero()) return "ZERO";
  return "@" + std::to_string(x.min_position()) + ":" + x.digits();
}

std::vector<Config> parse_tuple_text(std::string_view text) {
  std::vector<Config> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      out.push_back(parse_config(line));
    } catch (const Error& e) {
      parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string emit_tuple_text(const std::vector<Config>& xs) {
  std::string out;
  for (const Config& x : xs) out += emit_config(x) + "\n";
  return out;
}

TransportWord parse_word(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) parse_error("a word file must hold a JSON array");
  TransportWord w;
  for (const json& ins : j) w.push_back(from_json(ins));
  return w;
}

std::string emit_word(const TransportWord& w) {
  if (w.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += "  " + to_json(w[i]).dump();
    out += i + 1 < w.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  out << text;
}

}  // namespace rca
