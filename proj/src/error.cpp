#include "rca/error.hpp"

namespace rca {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::OrbitCollision: return "OrbitCollision";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "ParseError";
    case Errc::IllFormedWordSet: return "IllFormedWordSet";
    case Errc::IllFormedSpec: return "IllFormedSpec";
    case Errc::IllFormedInstruction: return "IllFormedInstruction";
    case Errc::DuplicateSource: return "DuplicateSource";
    case Errc::DuplicateTarget: return "DuplicateTarget";
    case Errc::NoRoom: return "NoRoom";
    case Errc::HeadSymbolPresent: return "HeadSymbolPresent";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotGood: return "NotGood";
    case Errc::NotGreat: return "NotGreat";
    case Errc::InternalScheduleViolation: return "InternalScheduleViolation";
    case Errc::BetaOdd: return "BetaOdd";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::ZeroPaddingViolation: return "ZeroPaddingViolation";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& message) {
  std::string out(errc_name(code));
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string& message, std::optional<std::size_t> first,
             std::optional<std::size_t> second)
    : std::runtime_error(format_message(code, message)),
      code_(code),
      first_(first),
      second_(second) {}

}  // namespace rca
