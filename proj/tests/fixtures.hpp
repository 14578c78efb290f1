#pragma once

#include <string>
#include <vector>

#include "grit/dimacs.hpp"
#include "grit/drup_format.hpp"
#include "grit/grit_format.hpp"

namespace grit::fixtures {

// The running example: five clauses over three variables.
inline constexpr const char* kExampleCnf =
    "p cnf 3 5\n"
    " 1  2 0\n"
    "-1  2 0\n"
    " 1 -2 0\n"
    "-1  3 0\n"
    "-2 -3 0\n";

inline constexpr const char* kExampleDrup =
    "   1  0\n"
    "d  1  2 0\n"
    "d  1 -2 0\n"
    "   2  0\n"
    "d -1  2 0\n"
    "   3  0\n"
    "d -1  3 0\n"
    "d  1  0\n"
    "   0\n";

inline constexpr const char* kExampleGrit =
    "1  1  2 0 0\n"
    "2 -1  2 0 0\n"
    "3  1 -2 0 0\n"
    "4 -1  3 0 0\n"
    "5 -2 -3 0 0\n"
    "6  1  0 1 3 0\n"
    "0  1  3 0\n"
    "7  2  0 6 2 0\n"
    "0  2  0\n"
    "8  3  0 6 4 0\n"
    "0  4  6 0\n"
    "9  0  7 8 5 0\n";

inline Formula example_formula() { return parse_dimacs(std::string_view(kExampleCnf)); }
inline std::vector<ProofAction> example_proof() { return parse_grit(kExampleGrit); }
inline std::vector<DrupAction> example_drup() { return parse_drup(kExampleDrup); }

inline std::vector<ClauseId> ids(std::initializer_list<std::uint64_t> values) {
  std::vector<ClauseId> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace grit::fixtures
