#ifndef MTAGG_ERROR_HPP_
#define MTAGG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtagg {

enum class ErrorCode {
  invalid_parameter,
  empty_evaluation,
  alignment,
  decode,
  duplicate,
  parse,
  degenerate_input,
  io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::empty_evaluation: return "empty-evaluation";
    case ErrorCode::alignment: return "alignment";
    case ErrorCode::decode: return "decode";
    case ErrorCode::duplicate: return "duplicate";
    case ErrorCode::parse: return "parse";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

/// Every failure raised by the library. `code()` identifies the category so
/// callers (and tests) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + " error: " + message), code_(code), message_(message) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  /// The message without the category prefix.
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

  /// Same category, message prefixed with `context`.
  [[nodiscard]] Error with_context(const std::string& context) const { return Error(code_, context + ": " + message_); }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace mtagg

#endif  // MTAGG_ERROR_HPP_
