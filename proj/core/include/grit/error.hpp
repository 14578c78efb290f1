#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grit {

/// Lexical or syntactic failure in a DIMACS, GRIT or DRUP input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::uint64_t line, std::uint64_t offset)
      : std::runtime_error("line " + std::to_string(line) + ", byte " + std::to_string(offset) + ": " + message),
        message_(message),
        line_(line),
        offset_(offset) {}

  const std::string& message() const { return message_; }
  std::uint64_t line() const { return line_; }
  /// Zero-based byte offset of the offending token from the start of input.
  std::uint64_t offset() const { return offset_; }

 private:
  std::string message_;
  std::uint64_t line_;
  std::uint64_t offset_;
};

}  // namespace grit
