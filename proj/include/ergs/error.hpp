#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ergs {

// Error categories. The numeric values of Syntax/Unsupported/Timeout/Io are
// part of the CLI contract (process exit codes) and of the C API.
enum class ErrorCode : int {
  Ok = 0,
  Internal = 1,
  Syntax = 2,
  Unsupported = 3,
  Timeout = 4,
  Io = 5,
  Invalid = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(ErrorCode code, std::string message, size_t line, size_t column)
      : std::runtime_error(std::move(message)), code_(code), line_(line), column_(column) {}

  ErrorCode code() const { return code_; }
  std::optional<size_t> line() const { return line_; }
  std::optional<size_t> column() const { return column_; }

  // Message with "line:col: " prefix when a position is known.
  std::string positioned_message() const {
    if (!line_) return what();
    std::string out = "line " + std::to_string(*line_);
    if (column_) out += ":" + std::to_string(*column_);
    out += ": ";
    out += what();
    return out;
  }

 private:
  ErrorCode code_;
  std::optional<size_t> line_;
  std::optional<size_t> column_;
};

[[noreturn]] inline void throw_syntax(std::string msg, size_t line = 0, size_t col = 0) {
  if (line) throw Error(ErrorCode::Syntax, std::move(msg), line, col);
  throw Error(ErrorCode::Syntax, std::move(msg));
}

[[noreturn]] inline void throw_unsupported(const std::string& feature) {
  throw Error(ErrorCode::Unsupported, "unsupported feature: " + feature);
}

}  // namespace ergs
