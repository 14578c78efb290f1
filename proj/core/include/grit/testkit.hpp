#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "grit/formula.hpp"
#include "grit/proof.hpp"

namespace grit::testkit {

inline constexpr Variable kMaxEnumerationVars = 24;
inline constexpr unsigned kMaxTreeDepth = 24;

class TooManyVariables : public std::invalid_argument {
 public:
  explicit TooManyVariables(Variable n)
      : std::invalid_argument("exhaustive enumeration limited to " + std::to_string(kMaxEnumerationVars) +
                              " variables, got " + std::to_string(n)) {}
};

/// Exhaustive enumeration over the formula's variables (bit-parallel clause
/// masks). Throws TooManyVariables above kMaxEnumerationVars.
bool brute_force_unsat(const Formula& f);
bool brute_force_entails(const Formula& f, const Clause& c);

/// Second, independently written enumerators: recursive over a Valuation,
/// highest variable first, evaluated through the core satisfaction
/// predicates. Slower; meant for cross-checking the fast ones.
bool unsat_by_definition(const Formula& f);
bool entails_by_definition(const Formula& f, const Clause& c);

struct ProofFamily {
  Formula formula;
  std::vector<ProofAction> proof;
};

/// Clause k (0-based) of the complete formula over n variables: variable i
/// is negative iff bit (n - i) of k is set.
Clause complete_tree_clause(unsigned n, std::uint64_t k);

/// All 2^n full-width clauses over n variables, refuted by resolving
/// sibling clauses depth-first. Originals get ids 1..2^n in formula order
/// and are introduced just before use; each RUP step cites its two children
/// which are deleted right after. Throws std::out_of_range unless
/// 1 <= n <= kMaxTreeDepth.
ProofFamily gen_complete_tree(unsigned n);

/// Streaming variant for large n.
void gen_complete_tree(unsigned n, const std::function<void(const Clause&)>& on_clause,
                       const std::function<void(const ProofAction&)>& on_action);

/// Same proof with every deletion removed.
std::vector<ProofAction> without_deletions(std::span<const ProofAction> proof);

enum class Mutation {
  Identity,
  DropLine,
  PermuteAntecedents,
  AlterLiteral,
  SwapIds,
  DuplicateId,
  PrematureDelete,
};

std::string_view to_string(Mutation m);
Mutation mutation_for_seed(std::uint64_t seed);

/// One deterministic random corruption of `proof`, chosen from `seed`.
std::vector<ProofAction> mutate_proof(std::span<const ProofAction> proof, std::uint64_t seed);
std::vector<ProofAction> mutate_proof(std::span<const ProofAction> proof, Mutation kind, std::uint64_t seed);

/// Uniform random k-CNF: each clause has k distinct variables with random
/// signs (k is clamped to num_vars).
Formula random_kcnf(Variable num_vars, std::size_t num_clauses, unsigned k, std::mt19937_64& rng);

/// Clauses of mixed width 1..max_width.
Formula random_cnf(Variable num_vars, std::size_t num_clauses, unsigned max_width, std::mt19937_64& rng);

/// Keeps only the clauses satisfied by a random full assignment, so the
/// result is satisfiable by construction.
Formula plant_solution(const Formula& f, std::mt19937_64& rng, Valuation* solution = nullptr);

struct DrupOptions {
  /// Probability of emitting an extra (unneeded but valid) lemma at each
  /// refuted leaf, to give trimming something to remove.
  double redundant_lemma_rate = 0.0;
  /// Emit deletions of child lemmas once their parent is derived.
  bool delete_children = true;
};

/// DRUP refutation from a DPLL search with unit propagation: each refuted
/// node contributes the negation of its decision path. Returns nullopt if
/// the formula is satisfiable. Meant for small instances.
std::optional<std::vector<DrupAction>> dpll_drup(const Formula& f, std::mt19937_64& rng,
                                                 const DrupOptions& options = {});

}  // namespace grit::testkit
