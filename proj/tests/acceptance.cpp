// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Thresholds are fixed here on purpose.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "grit/checker.hpp"
#include "grit/converter.hpp"
#include "grit/dimacs.hpp"
#include "grit/grit_format.hpp"
#include "grit/testkit.hpp"

namespace fs = std::filesystem;
using namespace grit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kGoldenMaxMs = 50.0;
constexpr int kSoundnessMinPairs = 10'000;
constexpr Variable kSoundnessMaxVars = 18;
constexpr int kCompletenessMinInstances = 1'000;
constexpr unsigned kStreamingDepth = 16;
constexpr double kStreamingMaxSeconds = 10.0;
constexpr std::uint64_t kStreamingLineRatio = 100;
constexpr unsigned kDeletionDepth = 14;
constexpr double kDeletionMinReduction = 10.0;
constexpr int kContractInstances = 300;
constexpr int kRoundTripCases = 1'000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string command = std::string("'") + GRIT_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  for (std::size_t n; (n = fread(buffer, 1, sizeof buffer, pipe)) > 0;) r.out.append(buffer, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_path(const char* name) { return "'" + (fs::path(GRIT_TEST_DATA_DIR) / name).string() + "'"; }

std::optional<Formula> random_unsat(std::mt19937_64& rng, Variable lo, Variable hi, std::vector<DrupAction>* drup,
                                    const testkit::DrupOptions& options = {}) {
  auto vars = static_cast<Variable>(lo + rng() % (hi - lo + 1));
  auto ratio = 5 + rng() % 3;
  auto f = testkit::random_kcnf(vars, vars * ratio, 3, rng);
  auto d = testkit::dpll_drup(f, rng, options);
  if (!d) return std::nullopt;
  *drup = std::move(*d);
  return f;
}

// Whole process, median of five runs.
Outcome golden_cli() {
  std::vector<double> times;
  for (int i = 0; i < 5; ++i) {
    auto start = Clock::now();
    auto r = run_cli("check " + data_path("example.cnf") + " " + data_path("example.grit"));
    times.push_back(ms_since(start));
    if (r.code != 0 || r.out != "VERIFIED\n")
      return {false, "exit " + std::to_string(r.code) + ", output '" + r.out + "'"};
  }
  std::sort(times.begin(), times.end());
  double median = times[2];
  std::ostringstream d;
  d << "VERIFIED, exit 0, median " << median << " ms (limit " << kGoldenMaxMs << ")";
  return {median < kGoldenMaxMs, d.str()};
}

std::vector<ProofAction> random_actions(std::mt19937_64& rng, const Formula& f, std::size_t length) {
  std::vector<ProofAction> out;
  Variable vars = std::max<Variable>(f.max_variable(), 1);
  std::uint64_t next = 1;
  auto random_clause = [&] {
    std::vector<Literal> lits(rng() % 4);
    for (auto& l : lits) l = Literal(static_cast<Variable>(1 + rng() % vars), (rng() & 1) != 0);
    return Clause(lits);
  };
  for (std::size_t i = 0; i < length; ++i) {
    switch (rng() % 4) {
      case 0:
        if (!f.clauses.empty()) out.push_back(OriginalStep{ClauseId{next++}, f.clauses[rng() % f.clauses.size()]});
        break;
      case 1:
        out.push_back(DeleteStep{{ClauseId{1 + rng() % next}}});
        break;
      default: {
        RupStep r{ClauseId{next++}, (rng() % 4 == 0) ? Clause() : random_clause(), {}};
        r.antecedents.resize(1 + rng() % 5);
        for (auto& a : r.antecedents) a = ClauseId{1 + rng() % next};
        out.push_back(r);
      }
    }
  }
  return out;
}

// Checks (formula, proof) pairs built to be wrong in many ways; any
// verified pair must be unsatisfiable by exhaustive enumeration.
Outcome soundness() {
  std::mt19937_64 rng(0x5eed0001);
  int pairs = 0, verified = 0, unsound = 0, dropped = 0, planted = 0;
  auto judge = [&](const Formula& target, std::span<const ProofAction> proof) {
    ++pairs;
    if (!refute(target, proof).is_verified()) return;
    ++verified;
    if (!testkit::brute_force_unsat(target)) ++unsound;
  };
  while (pairs < kSoundnessMinPairs) {
    std::vector<DrupAction> drup;
    auto f = random_unsat(rng, 4, kSoundnessMaxVars, &drup);
    if (!f) {
      // Satisfiable instance: random garbage proofs only.
      auto vars = static_cast<Variable>(4 + rng() % (kSoundnessMaxVars - 3));
      auto g = testkit::random_kcnf(vars, vars * 3, 3, rng);
      for (int k = 0; k < 4; ++k) judge(g, random_actions(rng, g, 5 + rng() % 40));
      continue;
    }
    auto proof = convert(*f, drup, ConvertOptions{(rng() & 1) != 0});
    for (int k = 0; k < 16; ++k) {
      Formula target = *f;
      switch (rng() % 3) {
        case 0:
          target.clauses.erase(target.clauses.begin() + static_cast<std::ptrdiff_t>(rng() % target.clauses.size()));
          ++dropped;
          break;
        case 1:
          // Satisfiable by construction; the unmutated proof is tried too.
          target = testkit::plant_solution(*f, rng);
          ++planted;
          if (k % 4 == 0) {
            judge(target, proof);
            continue;
          }
          break;
        default:
          break;
      }
      judge(target, testkit::mutate_proof(proof, rng()));
    }
    judge(*f, random_actions(rng, *f, 5 + rng() % 40));
  }
  std::ostringstream d;
  d << pairs << " pairs (" << dropped << " with a clause removed, " << planted << " satisfiable by construction), "
    << verified << " verified, " << unsound
    << " verified while satisfiable";
  return {unsound == 0 && pairs >= kSoundnessMinPairs, d.str()};
}

Outcome completeness() {
  std::mt19937_64 rng(0x5eed0002);
  int instances = 0, verified = 0;
  while (instances < kCompletenessMinInstances) {
    std::vector<DrupAction> drup;
    auto f = random_unsat(rng, 3, 14, &drup, testkit::DrupOptions{0.2, (rng() & 1) != 0});
    if (!f) continue;
    ++instances;
    try {
      auto proof = convert(*f, drup, ConvertOptions{instances % 2 == 0});
      verified += refute(*f, proof).is_verified();
    } catch (const ConvertError&) {
    }
  }
  std::ostringstream d;
  d << verified << "/" << instances << " converted proofs verified";
  return {verified == instances, d.str()};
}

Outcome order_sensitivity() {
  auto f = fixtures::example_formula();
  auto good = fixtures::example_proof();
  auto bad = good;
  std::get<RupStep>(bad.back()).antecedents = fixtures::ids({5, 7, 8});
  auto v_good = refute(f, good);
  auto v_bad = refute(f, bad);
  std::string detail = "[7 8 5] " + v_good.describe() + "; [5 7 8] " + v_bad.describe();
  return {v_good.is_verified() && !v_bad.is_verified(), detail};
}

Outcome streaming() {
  auto dir = fs::temp_directory_path() / "grit_acceptance_stream";
  fs::create_directories(dir);
  auto cnf_path = dir / "tree.cnf", grit_path = dir / "tree.grit";
  {
    std::ofstream cnf(cnf_path, std::ios::binary), proof(grit_path, std::ios::binary);
    cnf << "p cnf " << kStreamingDepth << ' ' << (std::uint64_t{1} << kStreamingDepth) << '\n';
    testkit::gen_complete_tree(
        kStreamingDepth,
        [&](const Clause& c) {
          for (auto l : c) cnf << l.to_dimacs() << ' ';
          cnf << "0\n";
        },
        [&](const ProofAction& a) { write_grit(proof, a); });
  }
  auto start = Clock::now();
  auto f = read_dimacs_file(cnf_path);
  GritFileReader file(grit_path);
  CheckStats stats;
  auto v = refute(f, file.reader(), &stats);
  double seconds = ms_since(start) / 1000.0;
  auto stream = file.reader().stats();
  fs::remove_all(dir);

  std::uint64_t live_limit = 2 * (std::uint64_t{1} << kStreamingDepth);
  bool ok = v.is_verified() && stats.live.peak <= live_limit &&
            stream.lines_read >= kStreamingLineRatio * stream.peak_buffered_lines && seconds < kStreamingMaxSeconds;
  std::ostringstream d;
  d << v.describe() << ", peak live " << stats.live.peak << " (limit " << live_limit << "), " << stream.lines_read
    << " lines vs " << stream.peak_buffered_lines << " peak buffered (ratio limit " << kStreamingLineRatio << "), "
    << seconds << " s (limit " << kStreamingMaxSeconds << ")";
  return {ok, d.str()};
}

Outcome deletion_benefit() {
  auto family = testkit::gen_complete_tree(kDeletionDepth);
  auto bare = testkit::without_deletions(family.proof);
  CheckStats before, after;
  bool bare_ok = refute(family.formula, bare, &before).is_verified();
  auto trimmed = backward_trim(family.formula, bare);
  bool trimmed_ok = refute(family.formula, trimmed, &after).is_verified();
  double reduction = static_cast<double>(before.live.peak) / static_cast<double>(std::max<std::size_t>(after.live.peak, 1));
  std::ostringstream d;
  d << "peak live " << before.live.peak << " -> " << after.live.peak << " (" << reduction << "x, limit "
    << kDeletionMinReduction << "x)";
  return {bare_ok && trimmed_ok && reduction >= kDeletionMinReduction, d.str()};
}

// Converter output obeys the proof contract: ids are fresh, deletions name
// live clauses, originals belong to the formula and each RUP step's
// antecedents replay; trimmed output keeps the same guarantees.
Outcome cross_module_contract() {
  std::mt19937_64 rng(0x5eed0003);
  int instances = 0, good = 0;
  std::string first_failure;
  while (instances < kContractInstances) {
    std::vector<DrupAction> drup;
    auto f = random_unsat(rng, 4, 14, &drup, testkit::DrupOptions{0.3, true});
    if (!f) continue;
    ++instances;
    bool ok = true;
    for (bool trim : {false, true}) {
      std::vector<ProofAction> proof;
      try {
        proof = convert(*f, drup, ConvertOptions{trim});
      } catch (const ConvertError& e) {
        ok = false;
        if (first_failure.empty()) first_failure = e.what();
        break;
      }
      Checker checker(*f);
      std::set<ClauseId> seen;
      for (std::size_t i = 0; i < proof.size() && ok; ++i) {
        const auto& a = proof[i];
        if (const auto* o = std::get_if<OriginalStep>(&a)) ok = seen.insert(o->id).second && checker.in_formula(o->clause);
        if (const auto* r = std::get_if<RupStep>(&a))
          ok = seen.insert(r->id).second && checker.propagate(r->clause, r->antecedents).ok();
        if (const auto* d = std::get_if<DeleteStep>(&a))
          for (auto id : d->ids) ok = ok && checker.working_set().contains(id);
        auto v = checker.apply(a, i + 1);
        if (v && (!v->is_verified() || i + 1 != proof.size())) ok = false;
        if (!ok && first_failure.empty()) first_failure = "line " + std::to_string(i + 1) + ": " + to_string(a);
      }
    }
    good += ok;
  }
  std::ostringstream d;
  d << good << "/" << instances << " instances satisfy the contract in both modes";
  if (!first_failure.empty()) d << "; first failure " << first_failure;
  return {good == instances, d.str()};
}

std::string jitter_whitespace(const std::string& text, std::mt19937_64& rng) {
  std::string out;
  for (char c : text) {
    if (c == ' ') {
      out += (rng() & 1) ? "\t" : " ";
      for (auto n = rng() % 3; n > 0; --n) out += ' ';
    } else if (c == '\n') {
      if (rng() % 3 == 0) out += " \t";
      out += '\n';
      if (rng() % 4 == 0) out += "\n";
    } else {
      out += c;
    }
  }
  return out;
}

Outcome round_trips() {
  std::mt19937_64 rng(0x5eed0004);
  int grit_ok = 0, dimacs_ok = 0, fuzz_ok = 0;
  for (int i = 0; i < kRoundTripCases; ++i) {
    auto f = testkit::random_cnf(static_cast<Variable>(1 + rng() % 30), rng() % 40, 5, rng);
    dimacs_ok += parse_dimacs(to_dimacs_string(f)).clauses == f.clauses;
    auto proof = random_actions(rng, f, rng() % 30);
    auto text = to_grit_string(proof);
    grit_ok += parse_grit(text) == proof && to_grit_string(parse_grit(text)) == text;
    fuzz_ok += parse_grit(jitter_whitespace(text, rng)) == proof;
  }
  std::ostringstream d;
  d << "GRIT " << grit_ok << "/" << kRoundTripCases << ", DIMACS " << dimacs_ok << "/" << kRoundTripCases
    << ", whitespace fuzz " << fuzz_ok << "/" << kRoundTripCases;
  return {grit_ok == kRoundTripCases && dimacs_ok == kRoundTripCases && fuzz_ok == kRoundTripCases, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden-cli-check", golden_cli},
      {"soundness-fuzz", soundness},
      {"completeness-converted", completeness},
      {"antecedent-order-sensitivity", order_sensitivity},
      {"streaming-memory", streaming},
      {"deletion-benefit", deletion_benefit},
      {"cross-module-contract", cross_module_contract},
      {"format-round-trips", round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << static_cast<long>(ms_since(start))
              << " ms]" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
