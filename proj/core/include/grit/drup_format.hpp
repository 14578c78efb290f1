#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grit/proof.hpp"
#include "grit/stream_stats.hpp"

namespace grit {

namespace detail {
class TokenReader;
}

/// Streaming DRUP parser: one 0-terminated clause per line, "d" prefix for
/// deletions. Blank lines and 'c' comment lines are skipped.
class DrupReader final : public DrupSource {
 public:
  explicit DrupReader(std::istream& in);
  ~DrupReader() override;
  DrupReader(const DrupReader&) = delete;
  DrupReader& operator=(const DrupReader&) = delete;

  std::optional<DrupAction> next() override;
  std::uint64_t position() const override { return line_; }
  const StreamStats& stats() const;

 private:
  std::unique_ptr<detail::TokenReader> reader_;
  std::vector<Literal> lits_;
  std::uint64_t line_ = 0;
};

std::vector<DrupAction> parse_drup(std::string_view text);

void write_drup(std::ostream& out, const DrupAction& a);
std::string to_drup_string(std::span<const DrupAction> actions);

class DrupFileReader {
 public:
  explicit DrupFileReader(const std::filesystem::path& path);
  DrupReader& reader() { return *reader_; }

 private:
  std::ifstream file_;
  std::unique_ptr<DrupReader> reader_;
};

}  // namespace grit
