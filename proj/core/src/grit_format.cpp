#include "grit/grit_format.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "token_reader.hpp"

namespace grit {

using detail::TokenReader;
using Kind = TokenReader::Kind;

GritReader::GritReader(std::istream& in, std::size_t chunk_size)
    : reader_(std::make_unique<TokenReader>(in, chunk_size)) {}

GritReader::~GritReader() = default;

const StreamStats& GritReader::stats() const { return reader_->stats(); }

std::optional<ProofAction> GritReader::next() {
  items_.clear();
  for (;;) {
    auto tok = reader_->next();
    if (tok.kind == Kind::EndOfInput) {
      if (items_.empty()) return std::nullopt;
      break;
    }
    if (tok.kind == Kind::EndOfLine) {
      if (items_.empty()) continue;
      break;
    }
    if (tok.kind == Kind::Word) reader_->fail("unexpected token '" + std::string(tok.text) + "'", tok.line, tok.offset);
    if (items_.empty()) line_ = tok.line;
    items_.push_back({tok.value, tok.offset});
  }

  auto fail = [&](const std::string& msg, std::size_t index) -> void {
    auto offset = index < items_.size() ? items_[index].offset : items_.back().offset;
    reader_->fail(msg, line_, offset);
  };
  auto find_zero = [&](std::size_t from) {
    for (std::size_t i = from; i < items_.size(); ++i)
      if (items_[i].value == 0) return i;
    return items_.size();
  };
  auto read_ids = [&](std::size_t from, std::size_t to) {
    std::vector<ClauseId> ids;
    ids.reserve(to - from);
    for (std::size_t i = from; i < to; ++i) {
      if (items_[i].value < 0) fail("clause id must be positive", i);
      ids.emplace_back(static_cast<std::uint64_t>(items_[i].value));
    }
    return ids;
  };
  auto check_tail = [&](std::size_t last_zero) {
    if (last_zero == items_.size()) fail("fewer than two zero terminators", items_.size() - 1);
    if (last_zero + 1 != items_.size()) fail("token after final zero terminator", last_zero + 1);
  };

  if (items_[0].value == 0) {
    auto end = find_zero(1);
    check_tail(end);
    return DeleteStep{read_ids(1, end)};
  }
  if (items_[0].value < 0) fail("clause id must be positive", 0);
  ClauseId id{static_cast<std::uint64_t>(items_[0].value)};

  auto clause_end = find_zero(1);
  if (clause_end == items_.size()) fail("fewer than two zero terminators", items_.size() - 1);
  std::vector<Literal> lits;
  lits.reserve(clause_end - 1);
  for (std::size_t i = 1; i < clause_end; ++i) {
    try {
      lits.push_back(Literal::from_dimacs(items_[i].value));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), i);
    }
  }
  auto ids_end = find_zero(clause_end + 1);
  check_tail(ids_end);
  auto antecedents = read_ids(clause_end + 1, ids_end);
  if (antecedents.empty()) return OriginalStep{id, Clause(std::move(lits))};
  return RupStep{id, Clause(std::move(lits)), std::move(antecedents)};
}

std::vector<ProofAction> parse_grit(std::string_view text) {
  std::istringstream in{std::string(text)};
  GritReader reader(in);
  std::vector<ProofAction> out;
  while (auto a = reader.next()) out.push_back(std::move(*a));
  return out;
}

void write_grit(std::ostream& out, const ProofAction& a) { out << to_string(a) << '\n'; }

void write_grit(std::ostream& out, std::span<const ProofAction> actions) {
  for (const auto& a : actions) write_grit(out, a);
}

std::string to_grit_string(std::span<const ProofAction> actions) {
  std::ostringstream out;
  write_grit(out, actions);
  return out.str();
}

GritFileReader::GritFileReader(const std::filesystem::path& path) : file_(path, std::ios::binary) {
  if (!file_) throw std::runtime_error("cannot open " + path.string());
  reader_ = std::make_unique<GritReader>(file_);
}

}  // namespace grit
