#pragma once

#include <cstdint>
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

/// Streaming GRIT parser. Each line has exactly two zero terminators:
///
///   0 ids 0            delete
///   id lits 0 0        original
///   id lits 0 ids 0    learnt (RUP with ordered antecedents)
///
/// Spaces, tabs and blank lines are ignored; the last line may lack a
/// newline. Only the current line is held in memory.
class GritReader final : public ActionSource {
 public:
  explicit GritReader(std::istream& in, std::size_t chunk_size = 16 * 1024);
  ~GritReader() override;
  GritReader(const GritReader&) = delete;
  GritReader& operator=(const GritReader&) = delete;

  /// Throws ParseError on malformed lines.
  std::optional<ProofAction> next() override;
  /// Line number of the action last returned.
  std::uint64_t position() const override { return line_; }
  const StreamStats& stats() const;

 private:
  struct Item {
    std::int64_t value;
    std::uint64_t offset;
  };

  std::unique_ptr<detail::TokenReader> reader_;
  std::vector<Item> items_;
  std::uint64_t line_ = 0;
};

/// Parses a whole in-memory proof.
std::vector<ProofAction> parse_grit(std::string_view text);

/// Normal form: single spaces, one action per line, '\n' terminated.
void write_grit(std::ostream& out, const ProofAction& a);
void write_grit(std::ostream& out, std::span<const ProofAction> actions);
std::string to_grit_string(std::span<const ProofAction> actions);

/// Opens a GRIT file for streaming; owns the underlying file stream.
class GritFileReader {
 public:
  explicit GritFileReader(const std::filesystem::path& path);
  GritReader& reader() { return *reader_; }

 private:
  std::ifstream file_;
  std::unique_ptr<GritReader> reader_;
};

}  // namespace grit
