#include "grit/testkit.hpp"

#include <algorithm>
#include <set>

namespace grit::testkit {
namespace {

struct Masks {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

Masks masks_of(const Clause& c) {
  Masks m;
  for (auto l : c) (l.negative() ? m.neg : m.pos) |= 1u << (l.var() - 1);
  return m;
}

Variable checked_var_count(Variable n) {
  if (n > kMaxEnumerationVars) throw TooManyVariables(n);
  return n;
}

bool satisfied(std::uint32_t v, const Masks& m) { return ((v & m.pos) | (~v & m.neg)) != 0; }

}  // namespace

bool brute_force_unsat(const Formula& f) {
  auto n = checked_var_count(f.max_variable());
  std::vector<Masks> clauses;
  clauses.reserve(f.clauses.size());
  for (const auto& c : f.clauses) clauses.push_back(masks_of(c));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    auto bits = static_cast<std::uint32_t>(v);
    if (std::all_of(clauses.begin(), clauses.end(), [&](const Masks& m) { return satisfied(bits, m); })) return false;
  }
  return true;
}

bool brute_force_entails(const Formula& f, const Clause& c) {
  auto n = checked_var_count(std::max(f.max_variable(), c.max_variable()));
  std::vector<Masks> clauses;
  for (const auto& cl : f.clauses) clauses.push_back(masks_of(cl));
  auto goal = masks_of(c);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    auto bits = static_cast<std::uint32_t>(v);
    if (satisfied(bits, goal)) continue;
    if (std::all_of(clauses.begin(), clauses.end(), [&](const Masks& m) { return satisfied(bits, m); })) return false;
  }
  return true;
}

namespace {

// Visits every valuation of variables 1..n, assigning n first. Stops early
// when `visit` returns false; returns whether the walk completed.
template <typename Visit>
bool for_each_valuation(Valuation& v, Variable var, Visit&& visit) {
  if (var == 0) return visit(v);
  for (bool value : {false, true}) {
    v.set(var, value);
    if (!for_each_valuation(v, var - 1, visit)) return false;
  }
  return true;
}

}  // namespace

bool unsat_by_definition(const Formula& f) {
  auto n = checked_var_count(f.max_variable());
  Valuation v(n);
  return for_each_valuation(v, n, [&](const Valuation& val) { return !satisfies(val, f); });
}

bool entails_by_definition(const Formula& f, const Clause& c) {
  auto n = checked_var_count(std::max(f.max_variable(), c.max_variable()));
  Valuation v(n);
  return for_each_valuation(v, n, [&](const Valuation& val) { return !satisfies(val, f) || satisfies(val, c); });
}

Clause complete_tree_clause(unsigned n, std::uint64_t k) {
  std::vector<Literal> lits;
  lits.reserve(n);
  for (unsigned i = 1; i <= n; ++i) lits.emplace_back(i, ((k >> (n - i)) & 1u) != 0);
  return Clause(std::move(lits));
}

void gen_complete_tree(unsigned n, const std::function<void(const Clause&)>& on_clause,
                       const std::function<void(const ProofAction&)>& on_action) {
  if (n < 1 || n > kMaxTreeDepth) throw std::out_of_range("complete-tree depth must be in [1, 24]");
  const std::uint64_t leaves = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < leaves; ++k) on_clause(complete_tree_clause(n, k));

  std::uint64_t next_original = 1;
  std::uint64_t next_lemma = leaves + 1;
  std::vector<Literal> prefix;
  prefix.reserve(n);

  auto derive = [&](auto&& self, unsigned depth) -> ClauseId {
    if (depth == n) {
      ClauseId id{next_original++};
      on_action(OriginalStep{id, Clause(prefix)});
      return id;
    }
    prefix.emplace_back(depth + 1, false);
    auto pos = self(self, depth + 1);
    prefix.back() = prefix.back().negate();
    auto neg = self(self, depth + 1);
    prefix.pop_back();
    ClauseId id{next_lemma++};
    on_action(RupStep{id, Clause(prefix), {pos, neg}});
    if (depth > 0) on_action(DeleteStep{{pos, neg}});
    return id;
  };
  derive(derive, 0);
}

ProofFamily gen_complete_tree(unsigned n) {
  ProofFamily family;
  gen_complete_tree(
      n, [&](const Clause& c) { family.formula.clauses.push_back(c); },
      [&](const ProofAction& a) { family.proof.push_back(a); });
  family.formula.declared_vars = n;
  family.formula.declared_clauses = family.formula.clauses.size();
  return family;
}

std::vector<ProofAction> without_deletions(std::span<const ProofAction> proof) {
  std::vector<ProofAction> out;
  out.reserve(proof.size());
  for (const auto& a : proof)
    if (!std::holds_alternative<DeleteStep>(a)) out.push_back(a);
  return out;
}

std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::Identity: return "identity";
    case Mutation::DropLine: return "drop-line";
    case Mutation::PermuteAntecedents: return "permute-antecedents";
    case Mutation::AlterLiteral: return "alter-literal";
    case Mutation::SwapIds: return "swap-ids";
    case Mutation::DuplicateId: return "duplicate-id";
    case Mutation::PrematureDelete: return "premature-delete";
  }
  return "unknown";
}

namespace {

constexpr int kMutationCount = 7;

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

ClauseId* defined_id(ProofAction& a) {
  if (auto* o = std::get_if<OriginalStep>(&a)) return &o->id;
  if (auto* r = std::get_if<RupStep>(&a)) return &r->id;
  return nullptr;
}

Clause* clause_of(ProofAction& a) {
  if (auto* o = std::get_if<OriginalStep>(&a)) return &o->clause;
  if (auto* r = std::get_if<RupStep>(&a)) return &r->clause;
  return nullptr;
}

template <typename Pred>
std::vector<std::size_t> indices_where(const std::vector<ProofAction>& p, Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (pred(p[i])) out.push_back(i);
  return out;
}

void alter_literal(Clause& c, std::mt19937_64& rng) {
  std::vector<Literal> lits(c.begin(), c.end());
  Variable max_var = std::max<Variable>(c.max_variable(), 1);
  auto random_lit = [&] {
    return Literal(static_cast<Variable>(pick(rng, max_var + 1) + 1), (rng() & 1) != 0);
  };
  switch (lits.empty() ? 3 : pick(rng, 4)) {
    case 0: {
      auto& l = lits[pick(rng, lits.size())];
      l = l.negate();
      break;
    }
    case 1:
      lits[pick(rng, lits.size())] = random_lit();
      break;
    case 2:
      lits.erase(lits.begin() + static_cast<std::ptrdiff_t>(pick(rng, lits.size())));
      break;
    default:
      lits.push_back(random_lit());
      break;
  }
  c = Clause(std::move(lits));
}

}  // namespace

Mutation mutation_for_seed(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return static_cast<Mutation>(pick(rng, kMutationCount));
}

std::vector<ProofAction> mutate_proof(std::span<const ProofAction> proof, std::uint64_t seed) {
  return mutate_proof(proof, mutation_for_seed(seed), seed);
}

std::vector<ProofAction> mutate_proof(std::span<const ProofAction> proof, Mutation kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<ProofAction> p(proof.begin(), proof.end());
  if (p.empty()) return p;

  auto is_rup_with = [](std::size_t min_ants) {
    return [min_ants](const ProofAction& a) {
      const auto* r = std::get_if<RupStep>(&a);
      return r != nullptr && r->antecedents.size() >= min_ants;
    };
  };
  auto is_definition = [](const ProofAction& a) { return !std::holds_alternative<DeleteStep>(a); };

  switch (kind) {
    case Mutation::Identity:
      break;
    case Mutation::DropLine:
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(pick(rng, p.size())));
      break;
    case Mutation::PermuteAntecedents: {
      auto candidates = indices_where(p, is_rup_with(2));
      if (candidates.empty()) break;
      auto& ants = std::get<RupStep>(p[candidates[pick(rng, candidates.size())]]).antecedents;
      auto before = ants;
      std::shuffle(ants.begin(), ants.end(), rng);
      if (ants == before) std::rotate(ants.begin(), ants.begin() + 1, ants.end());
      break;
    }
    case Mutation::AlterLiteral: {
      auto candidates = indices_where(p, is_definition);
      if (candidates.empty()) break;
      alter_literal(*clause_of(p[candidates[pick(rng, candidates.size())]]), rng);
      break;
    }
    case Mutation::SwapIds: {
      auto candidates = indices_where(p, is_definition);
      if (candidates.size() < 2) break;
      auto a = candidates[pick(rng, candidates.size())];
      auto b = candidates[pick(rng, candidates.size())];
      std::swap(*defined_id(p[a]), *defined_id(p[b]));
      break;
    }
    case Mutation::DuplicateId: {
      auto candidates = indices_where(p, is_definition);
      if (candidates.size() < 2) break;
      auto j = 1 + pick(rng, candidates.size() - 1);
      auto i = pick(rng, j);
      *defined_id(p[candidates[j]]) = *defined_id(p[candidates[i]]);
      break;
    }
    case Mutation::PrematureDelete: {
      auto candidates = indices_where(p, is_rup_with(1));
      if (candidates.empty()) break;
      auto at = candidates[pick(rng, candidates.size())];
      const auto& ants = std::get<RupStep>(p[at]).antecedents;
      DeleteStep del{{ants[pick(rng, ants.size())]}};
      p.insert(p.begin() + static_cast<std::ptrdiff_t>(at), std::move(del));
      break;
    }
  }
  return p;
}

Formula random_kcnf(Variable num_vars, std::size_t num_clauses, unsigned k, std::mt19937_64& rng) {
  Formula f;
  k = std::min<unsigned>(k, num_vars);
  std::vector<Variable> vars(num_vars);
  for (Variable v = 0; v < num_vars; ++v) vars[v] = v + 1;
  for (std::size_t i = 0; i < num_clauses; ++i) {
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Literal> lits;
    for (unsigned j = 0; j < k; ++j) lits.emplace_back(vars[j], (rng() & 1) != 0);
    f.clauses.emplace_back(std::move(lits));
  }
  f.declared_vars = num_vars;
  f.declared_clauses = num_clauses;
  return f;
}

Formula random_cnf(Variable num_vars, std::size_t num_clauses, unsigned max_width, std::mt19937_64& rng) {
  Formula f;
  for (std::size_t i = 0; i < num_clauses; ++i) {
    auto width = 1 + pick(rng, std::max(1u, max_width));
    std::vector<Literal> lits;
    for (std::size_t j = 0; j < width; ++j)
      lits.emplace_back(static_cast<Variable>(pick(rng, num_vars) + 1), (rng() & 1) != 0);
    f.clauses.emplace_back(std::move(lits));
  }
  f.declared_vars = num_vars;
  f.declared_clauses = num_clauses;
  return f;
}

Formula plant_solution(const Formula& f, std::mt19937_64& rng, Valuation* solution) {
  Valuation v;
  for (Variable x = 1; x <= f.max_variable(); ++x) v.set(x, (rng() & 1) != 0);
  Formula out;
  for (const auto& c : f.clauses)
    if (satisfies(v, c)) out.clauses.push_back(c);
  out.declared_vars = f.declared_vars;
  out.declared_clauses = out.clauses.size();
  if (solution != nullptr) *solution = std::move(v);
  return out;
}

namespace {

class Dpll {
 public:
  Dpll(const Formula& f, std::mt19937_64& rng, const DrupOptions& options)
      : f_(f), rng_(rng), options_(options), values_(static_cast<std::size_t>(f.max_variable()) + 1, 0) {
    std::set<Variable> vars;
    for (const auto& c : f.clauses)
      for (auto l : c) vars.insert(l.var());
    vars_.assign(vars.begin(), vars.end());
  }

  std::optional<std::vector<DrupAction>> run() {
    if (!refute()) return std::nullopt;
    return std::move(out_);
  }

 private:
  int value(Literal l) const { return l.negative() ? -values_[l.var()] : values_[l.var()]; }
  void assign(Literal l) {
    values_[l.var()] = l.negative() ? -1 : 1;
    trail_.push_back(l);
  }
  void undo(std::size_t size) {
    while (trail_.size() > size) {
      values_[trail_.back().var()] = 0;
      trail_.pop_back();
    }
  }

  // Unit propagation over the input clauses only; true on conflict.
  bool propagate() {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : f_.clauses) {
        std::optional<Literal> open;
        int unassigned = 0;
        bool sat = false;
        for (auto l : c) {
          int v = value(l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            open = l;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return true;
        if (unassigned == 1) {
          assign(*open);
          changed = true;
        }
      }
    }
    return false;
  }

  Clause blocking_clause() const {
    std::vector<Literal> lits;
    for (auto d : decisions_) lits.push_back(d.negate());
    return Clause(std::move(lits));
  }

  bool refute() {
    auto mark = trail_.size();
    if (propagate()) {
      if (options_.redundant_lemma_rate > 0 && std::bernoulli_distribution(options_.redundant_lemma_rate)(rng_))
        emit_redundant();
      out_.push_back(DrupAction::add(blocking_clause()));
      undo(mark);
      return true;
    }
    std::vector<Variable> open;
    for (auto v : vars_)
      if (values_[v] == 0) open.push_back(v);
    if (open.empty()) {
      undo(mark);
      return false;
    }
    Literal first(open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng_)], (rng_() & 1) != 0);
    bool refuted = true;
    std::vector<Clause> children;
    for (auto branch : {first, first.negate()}) {
      decisions_.push_back(branch);
      auto before = trail_.size();
      assign(branch);
      refuted = refute();
      undo(before);
      if (refuted) children.push_back(blocking_clause());
      decisions_.pop_back();
      if (!refuted) break;
    }
    if (refuted) {
      out_.push_back(DrupAction::add(blocking_clause()));
      if (options_.delete_children && !decisions_.empty())
        for (auto& c : children) out_.push_back(DrupAction::remove(std::move(c)));
    }
    undo(mark);
    return refuted;
  }

  void emit_redundant() {
    if (vars_.empty()) return;
    std::vector<Literal> lits;
    for (auto d : decisions_) lits.push_back(d.negate());
    auto v = vars_[std::uniform_int_distribution<std::size_t>(0, vars_.size() - 1)(rng_)];
    if (std::any_of(lits.begin(), lits.end(), [&](Literal l) { return l.var() == v; })) return;
    lits.emplace_back(v, (rng_() & 1) != 0);
    out_.push_back(DrupAction::add(Clause(std::move(lits))));
  }

  const Formula& f_;
  std::mt19937_64& rng_;
  DrupOptions options_;
  std::vector<int> values_;
  std::vector<Variable> vars_;
  std::vector<Literal> trail_;
  std::vector<Literal> decisions_;
  std::vector<DrupAction> out_;
};

}  // namespace

std::optional<std::vector<DrupAction>> dpll_drup(const Formula& f, std::mt19937_64& rng, const DrupOptions& options) {
  return Dpll(f, rng, options).run();
}

}  // namespace grit::testkit
