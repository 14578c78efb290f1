#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grit/formula.hpp"

namespace grit {

/// Reads DIMACS CNF. Comment lines ('c') are skipped, clauses may span
/// lines, and clause order is preserved. Header/body disagreements (clause
/// count, variables above the declared bound) are reported through
/// `warnings` when given and are otherwise ignored. Throws ParseError.
Formula parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Formula parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Throws std::runtime_error if the file cannot be opened.
Formula read_dimacs_file(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

/// Header uses the larger of the declared and actual variable counts and the
/// actual clause count.
void write_dimacs(std::ostream& out, const Formula& f);
std::string to_dimacs_string(const Formula& f);

}  // namespace grit
