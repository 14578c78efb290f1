#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "grit/formula.hpp"

namespace grit {

/// Propagation state left behind by the last RUP check.
struct Assignment {
  struct Entry {
    Literal literal;                 // literal made true
    std::optional<ClauseId> reason;  // nullopt for assumed literals
  };

  std::vector<Entry> trail;
  /// trail[0, assumed) holds the negated literals of the checked clause.
  std::size_t assumed = 0;
};

/// Clause database with two-watched-literal unit propagation and reason
/// recording. Used to find antecedent orders for lemmas of a DRUP proof.
///
/// Between checks the assignment is empty, so watches never need repair
/// when clauses are added or removed.
class RupEngine {
 public:
  /// Throws std::invalid_argument if the id is already present.
  void add_clause(ClauseId id, const Clause& clause);
  /// Returns false if the id is not present.
  bool remove_clause(ClauseId id);
  bool contains(ClauseId id) const { return slot_of_.contains(id); }
  std::size_t size() const { return slot_of_.size(); }

  /// Assumes the negation of `c` and propagates to fixpoint. On conflict
  /// returns the antecedents that took part, in trail order followed by the
  /// conflicting clause; replaying them through restricted propagation
  /// succeeds. Returns nullopt if propagation stalls or `c` is a tautology.
  std::optional<std::vector<ClauseId>> check_rup(const Clause& c);

  /// Reasons reachable backward from `conflict` through the current trail,
  /// in trail order, then `conflict` itself.
  std::vector<ClauseId> used_antecedents(ClauseId conflict) const;

  const Assignment& assignment() const { return assignment_; }

 private:
  static constexpr std::uint32_t kNoSlot = 0xffffffffu;

  struct Slot {
    ClauseId id;
    std::vector<Literal> lits;  // lits[0], lits[1] are watched
    bool live = true;
  };
  struct Watch {
    std::uint32_t slot;
    Literal blocker;
  };

  void ensure_var(Variable v);
  std::int8_t value(Literal l) const {
    auto v = values_[l.var()];
    return l.negative() ? static_cast<std::int8_t>(-v) : v;
  }
  void assign(Literal l, std::uint32_t reason);
  void reset();
  std::uint32_t propagate();
  void collect_garbage();
  std::vector<ClauseId> used_antecedents_from(std::uint32_t conflict) const;

  std::vector<Slot> slots_;
  std::unordered_map<ClauseId, std::uint32_t> slot_of_;
  std::vector<std::vector<Watch>> watches_;  // by literal code
  std::vector<std::uint32_t> units_;
  std::vector<std::uint32_t> empties_;
  std::size_t dead_ = 0;

  std::vector<std::int8_t> values_;      // by variable: 1 true, -1 false, 0 unassigned
  std::vector<std::uint32_t> reasons_;   // by variable
  std::vector<Literal> trail_;
  std::size_t qhead_ = 0;
  Assignment assignment_;
};

/// One-shot convenience over an id-keyed database.
std::optional<std::vector<ClauseId>> check_rup(const std::map<ClauseId, Clause>& db, const Clause& c);

}  // namespace grit
