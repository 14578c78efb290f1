#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "grit/error.hpp"
#include "grit/stream_stats.hpp"

namespace grit::detail {

/// Whitespace-separated token scanner over a byte stream, reading fixed-size
/// chunks. Newlines are reported as tokens because every format here is
/// line-oriented at least in part.
class TokenReader {
 public:
  static constexpr std::size_t kDefaultChunk = 16 * 1024;

  enum class Kind { Integer, Word, EndOfLine, EndOfInput };

  struct Token {
    Kind kind = Kind::EndOfInput;
    std::int64_t value = 0;
    std::string_view text;  // Word only; valid until the next call
    std::uint64_t line = 0;
    std::uint64_t offset = 0;
  };

  explicit TokenReader(std::istream& in, std::size_t chunk = kDefaultChunk);

  Token next();

  /// Next byte after skipping blanks on the current line, without consuming
  /// it. Returns -1 at end of input.
  int peek();

  /// Consumes everything up to and including the next newline, unchecked.
  void skip_line();

  std::uint64_t line() const { return line_; }
  std::uint64_t offset() const { return offset_; }
  const StreamStats& stats() const { return stats_; }

  [[noreturn]] void fail(const std::string& message, std::uint64_t line, std::uint64_t offset) const;

 private:
  bool fill();
  int peek_raw() {
    if (pos_ == end_ && !fill()) return -1;
    return static_cast<unsigned char>(buffer_[pos_]);
  }
  void advance();
  void skip_blanks();

  std::istream& in_;
  std::vector<char> buffer_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  bool eof_ = false;
  bool at_line_start_ = true;
  std::uint64_t line_ = 1;
  std::uint64_t offset_ = 0;
  std::string word_;
  StreamStats stats_;
};

}  // namespace grit::detail
