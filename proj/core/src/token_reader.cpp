#include "token_reader.hpp"

#include <algorithm>
#include <limits>

namespace grit::detail {
namespace {

bool is_blank(int c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(int c) { return c >= '0' && c <= '9'; }
bool is_token_byte(int c) { return c > 0x20 && c < 0x7f; }

}  // namespace

TokenReader::TokenReader(std::istream& in, std::size_t chunk) : in_(in), buffer_(std::max<std::size_t>(chunk, 1)) {
  stats_.buffer_capacity = buffer_.size();
}

bool TokenReader::fill() {
  if (eof_) return false;
  in_.read(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  end_ = static_cast<std::size_t>(in_.gcount());
  pos_ = 0;
  if (end_ == 0) {
    eof_ = true;
    return false;
  }
  stats_.bytes_read += end_;
  auto newlines = static_cast<std::uint64_t>(std::count(buffer_.begin(), buffer_.begin() + end_, '\n'));
  stats_.peak_buffered_lines = std::max(stats_.peak_buffered_lines, newlines + 1);
  return true;
}

void TokenReader::advance() {
  if (at_line_start_) {
    ++stats_.lines_read;
    at_line_start_ = false;
  }
  if (buffer_[pos_] == '\n') {
    ++line_;
    at_line_start_ = true;
  }
  ++pos_;
  ++offset_;
}

void TokenReader::skip_blanks() {
  for (int c = peek_raw(); is_blank(c); c = peek_raw()) advance();
}

void TokenReader::fail(const std::string& message, std::uint64_t line, std::uint64_t offset) const {
  throw ParseError(message, line, offset);
}

int TokenReader::peek() {
  skip_blanks();
  return peek_raw();
}

void TokenReader::skip_line() {
  for (int c = peek_raw(); c != -1; c = peek_raw()) {
    advance();
    if (c == '\n') return;
  }
}

TokenReader::Token TokenReader::next() {
  skip_blanks();
  Token tok;
  tok.line = line_;
  tok.offset = offset_;
  int c = peek_raw();
  if (c == -1) {
    tok.kind = Kind::EndOfInput;
    return tok;
  }
  if (c == '\n') {
    advance();
    tok.kind = Kind::EndOfLine;
    return tok;
  }
  if (!is_token_byte(c)) fail("unexpected non-ASCII or control byte", tok.line, tok.offset);

  if (is_digit(c) || c == '-' || c == '+') {
    bool negative = c == '-';
    if (c == '-' || c == '+') advance();
    constexpr auto kLimit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    std::uint64_t magnitude = 0;
    bool any_digit = false;
    for (c = peek_raw(); is_digit(c); c = peek_raw()) {
      auto digit = static_cast<std::uint64_t>(c - '0');
      if (magnitude > (kLimit - digit) / 10) fail("integer out of 64-bit range", tok.line, tok.offset);
      magnitude = magnitude * 10 + digit;
      any_digit = true;
      advance();
    }
    if (!any_digit || (c != -1 && c != '\n' && !is_blank(c))) fail("malformed integer", tok.line, tok.offset);
    tok.kind = Kind::Integer;
    tok.value = negative ? -static_cast<std::int64_t>(magnitude) : static_cast<std::int64_t>(magnitude);
    return tok;
  }

  word_.clear();
  for (c = peek_raw(); c != -1 && c != '\n' && !is_blank(c); c = peek_raw()) {
    if (!is_token_byte(c)) fail("unexpected non-ASCII byte", line_, offset_);
    word_.push_back(static_cast<char>(c));
    advance();
  }
  tok.kind = Kind::Word;
  tok.text = word_;
  return tok;
}

}  // namespace grit::detail
