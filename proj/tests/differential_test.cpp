// Randomised agreement between modules and the enumeration oracles.

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "grit/checker.hpp"
#include "grit/converter.hpp"
#include "grit/dimacs.hpp"
#include "grit/grit_format.hpp"
#include "grit/testkit.hpp"

namespace grit {
namespace {

using namespace testkit;

std::optional<Formula> random_unsat(std::mt19937_64& rng, Variable max_vars) {
  auto vars = static_cast<Variable>(3 + rng() % (max_vars - 2));
  auto f = random_kcnf(vars, vars * (4 + rng() % 3), 3, rng);
  if (!brute_force_unsat(f)) return std::nullopt;
  return f;
}

Formula drop_one_clause(const Formula& f, std::mt19937_64& rng) {
  Formula g = f;
  g.clauses.erase(g.clauses.begin() + static_cast<std::ptrdiff_t>(rng() % g.clauses.size()));
  return g;
}

// Converted proofs verify, both in memory and after a text round trip
// through the streaming reader.
TEST(DifferentialTest, ConvertThenCheck) {
  std::mt19937_64 rng(1001);
  int done = 0;
  while (done < 150) {
    auto f = random_unsat(rng, 12);
    if (!f) continue;
    ++done;
    auto drup = dpll_drup(*f, rng, DrupOptions{0.2, (rng() & 1) != 0});
    ASSERT_TRUE(drup.has_value());
    for (bool trim : {false, true}) {
      auto proof = convert(*f, *drup, ConvertOptions{trim});
      ASSERT_TRUE(refute(*f, proof).is_verified());
      std::istringstream text(to_grit_string(proof));
      GritReader reader(text, 64);
      ASSERT_TRUE(refute(*f, reader).is_verified());
    }
  }
}

// A verified proof means the formula is unsatisfiable, whatever was done to
// the proof or to the formula.
TEST(DifferentialTest, CheckerNeverVerifiesSatisfiableFormulas) {
  std::mt19937_64 rng(2002);
  int verified_unsat = 0, sat_seen = 0;
  for (int iter = 0; iter < 600; ++iter) {
    auto f = random_unsat(rng, 10);
    if (!f) continue;
    auto drup = dpll_drup(*f, rng);
    ASSERT_TRUE(drup.has_value());
    auto proof = convert(*f, *drup, ConvertOptions{(rng() & 1) != 0});
    for (int m = 0; m < 4; ++m) {
      auto mutated = mutate_proof(proof, rng());
      Formula target = *f;
      switch (rng() % 3) {
        case 0: target = drop_one_clause(*f, rng); break;
        case 1: target = plant_solution(*f, rng); break;
        default: break;
      }
      bool unsat = brute_force_unsat(target);
      sat_seen += !unsat;
      auto v = refute(target, mutated);
      if (v.is_verified()) {
        ASSERT_TRUE(unsat) << to_dimacs_string(target) << to_grit_string(mutated);
        ++verified_unsat;
      }
    }
  }
  EXPECT_GT(sat_seen, 50);
  EXPECT_GT(verified_unsat, 50);
}

// Every lemma of a verified proof is entailed by the clauses live when it
// was added.
TEST(DifferentialTest, LemmasAreEntailed) {
  std::mt19937_64 rng(3003);
  int done = 0;
  while (done < 60) {
    auto f = random_unsat(rng, 9);
    if (!f) continue;
    ++done;
    auto drup = dpll_drup(*f, rng);
    auto proof = convert(*f, *drup, ConvertOptions{false});
    Checker checker(*f);
    for (std::size_t i = 0; i < proof.size(); ++i) {
      if (const auto* r = std::get_if<RupStep>(&proof[i])) {
        Formula live;
        for (std::size_t j = 0; j < i; ++j) {
          const auto* o = std::get_if<OriginalStep>(&proof[j]);
          const auto* q = std::get_if<RupStep>(&proof[j]);
          ClauseId id = o ? o->id : q ? q->id : ClauseId{};
          if (id.valid() && checker.working_set().contains(id))
            live.clauses.push_back(*checker.working_set().find(id));
        }
        ASSERT_TRUE(brute_force_entails(live, r->clause)) << to_string(proof[i]);
      }
      auto v = checker.apply(proof[i], i + 1);
      if (v) ASSERT_TRUE(v->is_verified());
    }
  }
}

TEST(DifferentialTest, DimacsTextRoundTripPreservesVerdicts) {
  std::mt19937_64 rng(4004);
  int done = 0;
  while (done < 50) {
    auto f = random_unsat(rng, 10);
    if (!f) continue;
    ++done;
    auto again = parse_dimacs(to_dimacs_string(*f));
    auto proof = convert(*f, *dpll_drup(*f, rng), ConvertOptions{});
    EXPECT_TRUE(refute(again, proof).is_verified());
  }
}

}  // namespace
}  // namespace grit
