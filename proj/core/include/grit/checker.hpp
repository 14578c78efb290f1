#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grit/formula.hpp"
#include "grit/proof.hpp"

namespace grit {

enum class RejectionKind {
  UnknownAntecedent,
  NotUnitNorEmpty,
  OriginalNotInFormula,
  DuplicateId,
  DeleteUnknownId,
  StreamExhausted,
  ParseFailure,
};

std::string_view to_string(RejectionKind kind);

struct Rejection {
  RejectionKind kind = RejectionKind::StreamExhausted;
  ClauseId id;          // offending clause id, when there is one
  Clause clause;        // offending clause for OriginalNotInFormula
  std::string detail;
  std::uint64_t line = 0;
};

class Verdict {
 public:
  static Verdict verified(std::uint64_t line) { return Verdict(line); }
  static Verdict rejected(Rejection r) { return Verdict(std::move(r)); }

  bool is_verified() const { return !rejection_.has_value(); }
  /// Precondition: !is_verified().
  const Rejection& rejection() const { return *rejection_; }
  std::uint64_t line() const { return rejection_ ? rejection_->line : line_; }

  /// "VERIFIED" or "REJECTED <reason> at line L".
  std::string describe() const;

 private:
  explicit Verdict(std::uint64_t line) : line_(line) {}
  explicit Verdict(Rejection r) : rejection_(std::move(r)) {}

  std::optional<Rejection> rejection_;
  std::uint64_t line_ = 0;
};

struct LiveStats {
  std::size_t count = 0;
  std::size_t peak = 0;
  friend bool operator==(const LiveStats&, const LiveStats&) = default;
};

/// Live clauses during checking, keyed by proof id.
class WorkingSet {
 public:
  const Clause* find(ClauseId id) const;
  bool contains(ClauseId id) const { return live_.contains(id); }
  /// Returns false if the id is already live.
  bool insert(ClauseId id, Clause clause);
  bool erase(ClauseId id);

  LiveStats stats() const { return {live_.size(), peak_}; }
  std::size_t size() const { return live_.size(); }

 private:
  std::unordered_map<ClauseId, Clause> live_;
  std::size_t peak_ = 0;
};

enum class PropagateStatus {
  Conflict,           // an antecedent had nothing left outside the accumulated clause
  NotUnit,            // an antecedent left two or more literals
  Exhausted,          // list ended without conflict
  UnknownAntecedent,  // id not live
};

struct PropagateOutcome {
  PropagateStatus status = PropagateStatus::Exhausted;
  /// Antecedents examined, including the one that decided the outcome.
  std::size_t consumed = 0;
  /// Antecedent that decided a failure (NotUnit / UnknownAntecedent).
  ClauseId failed_at;

  bool ok() const { return status == PropagateStatus::Conflict; }
};

/// Restricted reverse unit propagation. Starting from A = c, each antecedent
/// D in turn must either be contained in A (success) or leave exactly one
/// literal l outside A, in which case -l joins A. Nothing is searched: the
/// order of `antecedents` is the whole witness.
class Propagator {
 public:
  PropagateOutcome run(const WorkingSet& w, const Clause& c, std::span<const ClauseId> antecedents);

 private:
  void mark(Literal l);
  bool marked(Literal l) const { return l.code() < stamps_.size() && stamps_[l.code()] == epoch_; }

  std::vector<std::uint32_t> stamps_;
  std::uint32_t epoch_ = 0;
};

PropagateOutcome propagate(const WorkingSet& w, const Clause& c, std::span<const ClauseId> antecedents);

/// Ids that were live once and have since been deleted, as disjoint closed
/// intervals. Proofs usually delete runs of neighbouring ids, so this stays
/// far smaller than one entry per id.
class RetiredIds {
 public:
  void insert(std::uint64_t id);
  bool contains(std::uint64_t id) const;
  std::size_t interval_count() const { return intervals_.size(); }

 private:
  std::map<std::uint64_t, std::uint64_t> intervals_;  // lo -> hi
};

/// Incremental proof checker over a fixed input formula. The formula must
/// outlive the checker.
class Checker {
 public:
  explicit Checker(const Formula& f);

  /// Applies one action. Returns a verdict once checking is decided:
  /// Verified on a successful empty-clause step, Rejected on the first
  /// failure. `position` is recorded in the verdict.
  std::optional<Verdict> apply(const ProofAction& a, std::uint64_t position);

  PropagateOutcome propagate(const Clause& c, std::span<const ClauseId> antecedents) {
    return propagator_.run(live_, c, antecedents);
  }

  bool in_formula(const Clause& c) const;
  const WorkingSet& working_set() const { return live_; }
  LiveStats live_stats() const { return live_.stats(); }
  /// Antecedents examined by the most recent RUP step.
  std::size_t last_consumed() const { return last_consumed_; }

 private:
  std::optional<Verdict> apply_delete(const DeleteStep& d, std::uint64_t position);
  std::optional<Verdict> apply_original(const OriginalStep& o, std::uint64_t position);
  std::optional<Verdict> apply_rup(const RupStep& r, std::uint64_t position);
  bool id_taken(ClauseId id) const { return live_.contains(id) || retired_.contains(id.value); }

  const Formula& formula_;
  std::vector<std::uint32_t> sorted_;  // formula clause indices in clause order
  WorkingSet live_;
  RetiredIds retired_;
  Propagator propagator_;
  std::size_t last_consumed_ = 0;
};

struct CheckStats {
  std::uint64_t actions = 0;
  LiveStats live;
};

/// Checks a whole proof from an empty working set. Reading stops at the
/// first verdict; a stream that ends without deriving the empty clause is
/// rejected with StreamExhausted.
Verdict refute(const Formula& f, ActionSource& proof, CheckStats* stats = nullptr);
Verdict refute(const Formula& f, std::span<const ProofAction> proof, CheckStats* stats = nullptr);

}  // namespace grit
