#include "grit/dimacs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "token_reader.hpp"

namespace grit {

using detail::TokenReader;
using Kind = TokenReader::Kind;

namespace {

void read_header(TokenReader& reader, Formula& f) {
  auto p = reader.next();
  auto format = reader.next();
  if (format.kind != Kind::Word || format.text != "cnf")
    reader.fail("malformed header: expected 'p cnf <vars> <clauses>'", p.line, p.offset);
  auto vars = reader.next();
  auto clauses = reader.next();
  if (vars.kind != Kind::Integer || clauses.kind != Kind::Integer || vars.value < 0 || clauses.value < 0)
    reader.fail("malformed header: counts must be non-negative integers", p.line, p.offset);
  if (vars.value > static_cast<std::int64_t>(kMaxVariable))
    reader.fail("declared variable count out of range", vars.line, vars.offset);
  auto end = reader.next();
  if (end.kind != Kind::EndOfLine && end.kind != Kind::EndOfInput)
    reader.fail("malformed header: trailing token", end.line, end.offset);
  f.declared_vars = static_cast<Variable>(vars.value);
  f.declared_clauses = static_cast<std::uint64_t>(clauses.value);
}

}  // namespace

Formula parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  TokenReader reader(in);
  Formula f;
  bool header_seen = false;
  bool warned_var = false;
  std::vector<Literal> pending;
  std::uint64_t pending_line = 0;

  for (int c = reader.peek(); c != -1; c = reader.peek()) {
    if (c == 'c') {
      reader.skip_line();
      continue;
    }
    if (c == 'p') {
      if (header_seen) reader.fail("duplicate header", reader.line(), reader.offset());
      read_header(reader, f);
      header_seen = true;
      continue;
    }
    auto tok = reader.next();
    if (tok.kind == Kind::EndOfLine) continue;
    if (tok.kind != Kind::Integer) reader.fail("unexpected token '" + std::string(tok.text) + "'", tok.line, tok.offset);
    if (!header_seen) reader.fail("clause before 'p cnf' header", tok.line, tok.offset);
    if (tok.value == 0) {
      f.clauses.emplace_back(std::move(pending));
      pending.clear();
      continue;
    }
    if (pending.empty()) pending_line = tok.line;
    Literal lit;
    try {
      lit = Literal::from_dimacs(tok.value);
    } catch (const std::invalid_argument& e) {
      reader.fail(e.what(), tok.line, tok.offset);
    }
    if (lit.var() > f.declared_vars && !warned_var && warnings) {
      warnings->push_back("line " + std::to_string(tok.line) + ": variable " + std::to_string(lit.var()) +
                          " exceeds declared count " + std::to_string(f.declared_vars));
      warned_var = true;
    }
    pending.push_back(lit);
  }

  if (!header_seen) reader.fail("missing 'p cnf' header", reader.line(), reader.offset());
  if (!pending.empty()) reader.fail("unterminated clause at end of input", pending_line, reader.offset());
  if (warnings && f.clauses.size() != f.declared_clauses)
    warnings->push_back("header declares " + std::to_string(f.declared_clauses) + " clauses, found " +
                        std::to_string(f.clauses.size()));
  return f;
}

Formula parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, warnings);
}

Formula read_dimacs_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_dimacs(in, warnings);
}

void write_dimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << std::max(f.declared_vars, f.max_variable()) << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (auto l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string to_dimacs_string(const Formula& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace grit
