#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

namespace grit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitError = 2;

struct Console {
  std::ostream& out;  // verdicts and reports
  std::ostream& err;  // diagnostics
  bool color = false;
};

struct CheckOptions {
  std::filesystem::path cnf;
  std::filesystem::path grit;
  bool stats = false;
  bool quiet = false;
};

struct ConvertCommandOptions {
  std::filesystem::path cnf;
  std::filesystem::path drup;
  std::filesystem::path out;
  bool trim = false;
};

struct TrimOptions {
  std::filesystem::path cnf;
  std::filesystem::path grit;
  std::filesystem::path out;
};

struct GenOptions {
  std::string family = "complete-tree";
  long long n = 0;
  std::filesystem::path out_cnf;
  std::filesystem::path out_grit;
};

struct BatchOptions {
  std::filesystem::path list;  // one "<cnf> <grit>" pair per line
  unsigned jobs = 1;
  bool quiet = false;
};

int cmd_check(const CheckOptions& options, Console& console);
int cmd_convert(const ConvertCommandOptions& options, Console& console);
int cmd_trim(const TrimOptions& options, Console& console);
int cmd_gen(const GenOptions& options, Console& console);
int cmd_batch(const BatchOptions& options, Console& console);

/// True when GRIT_COLOR is set to something other than "" or "0".
bool color_from_env();

}  // namespace grit::cli
