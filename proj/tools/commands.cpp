#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "grit/checker.hpp"
#include "grit/converter.hpp"
#include "grit/dimacs.hpp"
#include "grit/drup_format.hpp"
#include "grit/error.hpp"
#include "grit/grit_format.hpp"
#include "grit/testkit.hpp"

namespace grit::cli {
namespace {

void diagnose(Console& console, std::string_view level, const std::string& message) {
  if (console.color) {
    const char* code = level == "error" ? "\033[31m" : "\033[33m";
    console.err << code << level << ":\033[0m " << message << '\n';
  } else {
    console.err << level << ": " << message << '\n';
  }
}

void error(Console& console, const std::string& message) { diagnose(console, "error", message); }

// Reads the CNF, reporting problems. Returns nullopt after printing an error.
std::optional<Formula> load_formula(const std::filesystem::path& path, Console& console, bool quiet) {
  std::vector<std::string> warnings;
  try {
    auto f = read_dimacs_file(path, &warnings);
    if (!quiet)
      for (const auto& w : warnings) diagnose(console, "warning", path.string() + ": " + w);
    return f;
  } catch (const ParseError& e) {
    error(console, path.string() + ": " + e.what());
  } catch (const std::exception& e) {
    error(console, e.what());
  }
  return std::nullopt;
}

struct CheckResult {
  Verdict verdict = Verdict::rejected({});
  CheckStats stats;
  StreamStats stream;
};

int exit_code(const Verdict& v) {
  if (v.is_verified()) return kExitOk;
  return v.rejection().kind == RejectionKind::ParseFailure ? kExitError : kExitRejected;
}

}  // namespace

bool color_from_env() {
  const char* value = std::getenv("GRIT_COLOR");
  return value != nullptr && *value != '\0' && std::string_view(value) != "0";
}

int cmd_check(const CheckOptions& options, Console& console) {
  auto start = std::chrono::steady_clock::now();
  auto formula = load_formula(options.cnf, console, options.quiet);
  if (!formula) return kExitError;

  std::ifstream file(options.grit, std::ios::binary);
  if (!file) {
    error(console, "cannot open " + options.grit.string());
    return kExitError;
  }
  GritReader reader(file);
  CheckStats stats;
  auto verdict = refute(*formula, reader, &stats);
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (options.quiet) {
    console.out << (verdict.is_verified() ? "VERIFIED" : "REJECTED") << '\n';
  } else {
    console.out << verdict.describe() << '\n';
    if (options.stats) {
      const auto& stream = reader.stats();
      console.out << "peak live clauses: " << stats.live.peak << '\n'
                  << "live clauses at end: " << stats.live.count << '\n'
                  << "actions processed: " << stats.actions << '\n'
                  << "lines processed: " << stream.lines_read << '\n'
                  << "bytes read: " << stream.bytes_read << '\n'
                  << "peak buffered lines: " << stream.peak_buffered_lines << '\n'
                  << "wall time ms: " << std::fixed << std::setprecision(3) << elapsed << '\n';
    }
  }
  return exit_code(verdict);
}

int cmd_convert(const ConvertCommandOptions& options, Console& console) {
  auto formula = load_formula(options.cnf, console, false);
  if (!formula) return kExitError;

  std::unique_ptr<DrupFileReader> drup;
  try {
    drup = std::make_unique<DrupFileReader>(options.drup);
  } catch (const std::exception& e) {
    error(console, e.what());
    return kExitError;
  }
  std::ofstream out(options.out, std::ios::binary | std::ios::trunc);
  if (!out) {
    error(console, "cannot write " + options.out.string());
    return kExitError;
  }

  auto fail = [&](int code) {
    out.close();
    std::error_code ignored;
    std::filesystem::remove(options.out, ignored);
    return code;
  };

  ConvertSummary summary;
  try {
    summary = convert(*formula, drup->reader(), ConvertOptions{options.trim},
                      [&](const ProofAction& a) { write_grit(out, a); });
  } catch (const ConvertError& e) {
    error(console, options.drup.string() + ": " + e.what());
    return fail(kExitRejected);
  } catch (const ParseError& e) {
    error(console, options.drup.string() + ": " + e.what());
    return fail(kExitError);
  }
  out.flush();
  if (!out) {
    error(console, "write failed: " + options.out.string());
    return fail(kExitError);
  }
  console.out << "lemmas: " << summary.lemmas_total << " total, " << summary.lemmas_kept << " kept, "
              << summary.lemmas_dropped << " dropped\n"
              << "originals emitted: " << summary.originals_emitted << '\n'
              << "deletions emitted: " << summary.deletions_emitted << '\n'
              << "lines written: " << summary.lines_emitted << '\n';
  return kExitOk;
}

int cmd_trim(const TrimOptions& options, Console& console) {
  auto formula = load_formula(options.cnf, console, false);
  if (!formula) return kExitError;

  std::vector<ProofAction> proof;
  try {
    GritFileReader file(options.grit);
    while (auto a = file.reader().next()) proof.push_back(std::move(*a));
  } catch (const ParseError& e) {
    error(console, options.grit.string() + ": " + e.what());
    return kExitError;
  } catch (const std::exception& e) {
    error(console, e.what());
    return kExitError;
  }

  ConvertSummary summary;
  std::vector<ProofAction> trimmed;
  try {
    trimmed = backward_trim(*formula, proof, &summary);
  } catch (const ConvertError& e) {
    error(console, options.grit.string() + ": " + e.what());
    return kExitRejected;
  }
  std::ofstream out(options.out, std::ios::binary | std::ios::trunc);
  if (!out) {
    error(console, "cannot write " + options.out.string());
    return kExitError;
  }
  write_grit(out, trimmed);
  console.out << "lemmas: " << summary.lemmas_total << " total, " << summary.lemmas_kept << " kept, "
              << summary.lemmas_dropped << " dropped\n"
              << "deletions emitted: " << summary.deletions_emitted << '\n'
              << "lines written: " << summary.lines_emitted << '\n';
  return kExitOk;
}

int cmd_gen(const GenOptions& options, Console& console) {
  if (options.family != "complete-tree") {
    error(console, "unknown family '" + options.family + "' (available: complete-tree)");
    return kExitError;
  }
  if (options.n < 1 || options.n > static_cast<long long>(testkit::kMaxTreeDepth)) {
    error(console, "n must be in [1, " + std::to_string(testkit::kMaxTreeDepth) + "], got " + std::to_string(options.n));
    return kExitError;
  }
  std::ofstream cnf(options.out_cnf, std::ios::binary | std::ios::trunc);
  std::ofstream grit(options.out_grit, std::ios::binary | std::ios::trunc);
  if (!cnf || !grit) {
    error(console, "cannot write output files");
    return kExitError;
  }
  auto n = static_cast<unsigned>(options.n);
  cnf << "p cnf " << n << ' ' << (std::uint64_t{1} << n) << '\n';
  std::uint64_t actions = 0;
  testkit::gen_complete_tree(
      n,
      [&](const Clause& c) {
        for (auto l : c) cnf << l.to_dimacs() << ' ';
        cnf << "0\n";
      },
      [&](const ProofAction& a) {
        write_grit(grit, a);
        ++actions;
      });
  cnf.flush();
  grit.flush();
  if (!cnf || !grit) {
    error(console, "write failed");
    return kExitError;
  }
  console.out << "clauses: " << (std::uint64_t{1} << n) << '\n' << "proof lines: " << actions << '\n';
  return kExitOk;
}

int cmd_batch(const BatchOptions& options, Console& console) {
  std::ifstream list(options.list);
  if (!list) {
    error(console, "cannot open " + options.list.string());
    return kExitError;
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::string line; std::getline(list, line);) {
    std::istringstream fields(line);
    std::string cnf, proof;
    if (!(fields >> cnf)) continue;
    if (cnf.front() == '#') continue;
    if (!(fields >> proof)) {
      error(console, options.list.string() + ": expected '<cnf> <grit>' in line: " + line);
      return kExitError;
    }
    pairs.emplace_back(cnf, proof);
  }

  struct Outcome {
    int code = kExitError;
    std::string line;
    std::string diagnostics;
  };
  std::vector<Outcome> outcomes(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      std::ostringstream out, err;
      Console local{out, err, false};
      int code = cmd_check({pairs[i].first, pairs[i].second, false, true}, local);
      outcomes[i] = {code, out.str(), err.str()};
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1))));
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  int worst = kExitOk;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& o = outcomes[i];
    console.err << o.diagnostics;
    std::string verdict = o.line.empty() ? "ERROR\n" : o.line;
    if (options.quiet)
      console.out << verdict;
    else
      console.out << pairs[i].first << ' ' << pairs[i].second << ": " << verdict;
    worst = std::max(worst, o.code);
  }
  return worst;
}

}  // namespace grit::cli
