#include "grit/drup_format.hpp"

#include <ostream>
#include <sstream>

#include "token_reader.hpp"

namespace grit {

using detail::TokenReader;
using Kind = TokenReader::Kind;

DrupReader::DrupReader(std::istream& in) : reader_(std::make_unique<TokenReader>(in)) {}
DrupReader::~DrupReader() = default;

const StreamStats& DrupReader::stats() const { return reader_->stats(); }

std::optional<DrupAction> DrupReader::next() {
  for (;;) {
    int c = reader_->peek();
    if (c == -1) return std::nullopt;
    if (c == 'c') {
      reader_->skip_line();
      continue;
    }
    auto tok = reader_->next();
    if (tok.kind == Kind::EndOfLine) continue;

    line_ = tok.line;
    auto kind = DrupAction::Kind::Add;
    if (tok.kind == Kind::Word) {
      if (tok.text != "d") reader_->fail("unexpected token '" + std::string(tok.text) + "'", tok.line, tok.offset);
      kind = DrupAction::Kind::Delete;
      tok = reader_->next();
    }

    lits_.clear();
    for (;; tok = reader_->next()) {
      if (tok.kind == Kind::EndOfLine || tok.kind == Kind::EndOfInput)
        reader_->fail("clause not terminated by 0", tok.line, tok.offset);
      if (tok.kind != Kind::Integer) reader_->fail("unexpected token '" + std::string(tok.text) + "'", tok.line, tok.offset);
      if (tok.value == 0) break;
      try {
        lits_.push_back(Literal::from_dimacs(tok.value));
      } catch (const std::invalid_argument& e) {
        reader_->fail(e.what(), tok.line, tok.offset);
      }
    }
    auto end = reader_->next();
    if (end.kind != Kind::EndOfLine && end.kind != Kind::EndOfInput)
      reader_->fail("token after terminating 0", end.line, end.offset);
    return DrupAction{kind, Clause(lits_)};
  }
}

std::vector<DrupAction> parse_drup(std::string_view text) {
  std::istringstream in{std::string(text)};
  DrupReader reader(in);
  std::vector<DrupAction> out;
  while (auto a = reader.next()) out.push_back(std::move(*a));
  return out;
}

void write_drup(std::ostream& out, const DrupAction& a) {
  if (a.kind == DrupAction::Kind::Delete) out << "d ";
  for (auto l : a.clause) out << l.to_dimacs() << ' ';
  out << "0\n";
}

std::string to_drup_string(std::span<const DrupAction> actions) {
  std::ostringstream out;
  for (const auto& a : actions) write_drup(out, a);
  return out.str();
}

DrupFileReader::DrupFileReader(const std::filesystem::path& path) : file_(path, std::ios::binary) {
  if (!file_) throw std::runtime_error("cannot open " + path.string());
  reader_ = std::make_unique<DrupReader>(file_);
}

}  // namespace grit
