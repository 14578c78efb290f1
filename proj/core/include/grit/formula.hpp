#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "grit/literal.hpp"

namespace grit {

/// A set of literals kept sorted and duplicate-free, so equal sets compare
/// equal structurally. Tautologies are kept as given.
class Clause {
 public:
  using const_iterator = std::vector<Literal>::const_iterator;

  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  /// Convenience for tests and fixtures: {1, -2} etc. Zero is rejected.
  static Clause from_dimacs(std::initializer_list<std::int64_t> values);
  static Clause from_dimacs(std::span<const std::int64_t> values);

  std::span<const Literal> literals() const { return literals_; }
  const_iterator begin() const { return literals_.begin(); }
  const_iterator end() const { return literals_.end(); }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  bool contains(Literal l) const;
  bool is_tautology() const;
  Variable max_variable() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

/// DIMACS spelling without the terminating 0, e.g. "-1 2".
std::string to_string(const Clause& c);

/// The input CNF. Clause order is file order; duplicates are allowed.
struct Formula {
  std::vector<Clause> clauses;
  Variable declared_vars = 0;
  std::uint64_t declared_clauses = 0;

  Formula() = default;
  explicit Formula(std::vector<Clause> cs);

  /// Linear scan; callers needing repeated lookups build their own index.
  bool contains(const Clause& c) const;
  Variable max_variable() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Total assignment: variables beyond the stored range read as false.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(Variable num_vars) : values_(static_cast<std::size_t>(num_vars) + 1, false) {}

  bool value(Variable var) const { return var < values_.size() && values_[var]; }
  void set(Variable var, bool value);

 private:
  std::vector<bool> values_;
};

bool satisfies(const Valuation& v, Literal l);
bool satisfies(const Valuation& v, const Clause& c);
bool satisfies(const Valuation& v, const Formula& f);

}  // namespace grit
