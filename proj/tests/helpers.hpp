#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "rca/io.hpp"

namespace rca {
inline void PrintTo(const Config& x, std::ostream* os) { *os << emit_config(x); }
}  // namespace rca

inline rca::Config C(std::string_view text) { return rca::parse_config(text); }

inline std::vector<rca::Config> Cs(std::initializer_list<std::string_view> texts) {
  std::vector<rca::Config> out;
  for (std::string_view t : texts) out.push_back(C(t));
  return out;
}

inline rca::TupleK T(std::initializer_list<std::string_view> texts) {
  return rca::TupleK::validate(Cs(texts));
}

#define EXPECT_ERRC(stmt, errc)                                  \
  do {                                                           \
    try {                                                        \
      stmt;                                                      \
      ADD_FAILURE() << "expected " << rca::errc_name(errc);      \
    } catch (const rca::Error& e) {                              \
      EXPECT_EQ(e.code(), errc) << e.what();                     \
    }                                                            \
  } while (0)
