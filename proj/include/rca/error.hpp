#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rca {

enum class Errc {
  ZeroPoint,
  OrbitCollision,
  Overflow,
  Parse,
  IllFormedWordSet,
  IllFormedSpec,
  IllFormedInstruction,
  DuplicateSource,
  DuplicateTarget,
  NoRoom,
  HeadSymbolPresent,
  LengthMismatch,
  NotGood,
  NotGreat,
  InternalScheduleViolation,
  BetaOdd,
  KTooSmall,
  ZeroPaddingViolation,
  TooLarge,
};

std::string_view errc_name(Errc code);

// Every failure in the library is reported as an Error. Tuple validation
// errors carry the offending component indices.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> first = std::nullopt,
        std::optional<std::size_t> second = std::nullopt);

  Errc code() const { return code_; }
  std::optional<std::size_t> first() const { return first_; }
  std::optional<std::size_t> second() const { return second_; }

 private:
  Errc code_;
  std::optional<std::size_t> first_;
  std::optional<std::size_t> second_;
};

}  // namespace rca
