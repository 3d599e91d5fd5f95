#pragma once

// Text and JSON formats: `@<offset>:<digits>` points (ZERO for 0^Z), tuple
// files with one point per line, and JSON instruction words.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rca/config.hpp"
#include "rca/generators.hpp"

namespace rca {

Config parse_config(std::string_view text);
std::string emit_config(const Config& x);

// Blank lines and `#` comments are skipped.
std::vector<Config> parse_tuple_text(std::string_view text);
std::string emit_tuple_text(const std::vector<Config>& xs);

TransportWord parse_word(std::string_view text);
// One instruction per line; parse_word(emit_word(w)) == w and
// emit_word(parse_word(s)) == s for every emitted s.
std::string emit_word(const TransportWord& w);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rca
