#include "grit/formula.hpp"

#include <algorithm>

namespace grit {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

Clause::Clause(std::initializer_list<Literal> literals) : Clause(std::vector<Literal>(literals)) {}

Clause Clause::from_dimacs(std::initializer_list<std::int64_t> values) {
  return from_dimacs(std::span<const std::int64_t>(values.begin(), values.size()));
}

Clause Clause::from_dimacs(std::span<const std::int64_t> values) {
  std::vector<Literal> lits;
  lits.reserve(values.size());
  for (auto v : values) lits.push_back(Literal::from_dimacs(v));
  return Clause(std::move(lits));
}

bool Clause::contains(Literal l) const { return std::binary_search(literals_.begin(), literals_.end(), l); }

bool Clause::is_tautology() const {
  // Complementary literals are adjacent in the canonical order.
  for (std::size_t i = 1; i < literals_.size(); ++i)
    if (literals_[i].var() == literals_[i - 1].var()) return true;
  return false;
}

Variable Clause::max_variable() const { return literals_.empty() ? 0 : literals_.back().var(); }

std::string to_string(const Clause& c) {
  std::string out;
  for (auto l : c) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

Formula::Formula(std::vector<Clause> cs) : clauses(std::move(cs)) {
  declared_vars = max_variable();
  declared_clauses = clauses.size();
}

bool Formula::contains(const Clause& c) const {
  return std::find(clauses.begin(), clauses.end(), c) != clauses.end();
}

Variable Formula::max_variable() const {
  Variable m = 0;
  for (const auto& c : clauses) m = std::max(m, c.max_variable());
  return m;
}

void Valuation::set(Variable var, bool value) {
  if (var >= values_.size()) values_.resize(static_cast<std::size_t>(var) + 1, false);
  values_[var] = value;
}

bool satisfies(const Valuation& v, Literal l) { return v.value(l.var()) == l.positive(); }

bool satisfies(const Valuation& v, const Clause& c) {
  return std::any_of(c.begin(), c.end(), [&](Literal l) { return satisfies(v, l); });
}

bool satisfies(const Valuation& v, const Formula& f) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return satisfies(v, c); });
}

}  // namespace grit
