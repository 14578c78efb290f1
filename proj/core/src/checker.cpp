#include "grit/checker.hpp"

#include <algorithm>
#include <numeric>

#include "grit/error.hpp"

namespace grit {

std::string_view to_string(RejectionKind kind) {
  switch (kind) {
    case RejectionKind::UnknownAntecedent: return "UnknownAntecedent";
    case RejectionKind::NotUnitNorEmpty: return "NotUnitNorEmpty";
    case RejectionKind::OriginalNotInFormula: return "OriginalNotInFormula";
    case RejectionKind::DuplicateId: return "DuplicateId";
    case RejectionKind::DeleteUnknownId: return "DeleteUnknownId";
    case RejectionKind::StreamExhausted: return "StreamExhausted";
    case RejectionKind::ParseFailure: return "ParseFailure";
  }
  return "Unknown";
}

std::string Verdict::describe() const {
  if (is_verified()) return "VERIFIED";
  const auto& r = *rejection_;
  std::string out = "REJECTED ";
  out += to_string(r.kind);
  if (r.id.valid()) out += "(" + to_string(r.id) + ")";
  if (r.kind == RejectionKind::OriginalNotInFormula) out += "(" + to_string(r.clause) + ")";
  out += " at line " + std::to_string(r.line);
  if (!r.detail.empty()) out += ": " + r.detail;
  return out;
}

const Clause* WorkingSet::find(ClauseId id) const {
  auto it = live_.find(id);
  return it == live_.end() ? nullptr : &it->second;
}

bool WorkingSet::insert(ClauseId id, Clause clause) {
  if (!live_.try_emplace(id, std::move(clause)).second) return false;
  peak_ = std::max(peak_, live_.size());
  return true;
}

bool WorkingSet::erase(ClauseId id) { return live_.erase(id) != 0; }

void Propagator::mark(Literal l) {
  if (l.code() >= stamps_.size()) stamps_.resize(std::max<std::size_t>(l.code() + 1, stamps_.size() * 2), 0);
  stamps_[l.code()] = epoch_;
}

PropagateOutcome Propagator::run(const WorkingSet& w, const Clause& c, std::span<const ClauseId> antecedents) {
  if (++epoch_ == 0) {
    std::fill(stamps_.begin(), stamps_.end(), 0);
    epoch_ = 1;
  }
  for (auto l : c) mark(l);

  PropagateOutcome out;
  for (auto id : antecedents) {
    ++out.consumed;
    const Clause* d = w.find(id);
    if (d == nullptr) {
      out.status = PropagateStatus::UnknownAntecedent;
      out.failed_at = id;
      return out;
    }
    // d \ A: at most one literal may remain.
    std::optional<Literal> rest;
    bool too_many = false;
    for (auto l : *d) {
      if (marked(l)) continue;
      if (rest) {
        too_many = true;
        break;
      }
      rest = l;
    }
    if (too_many) {
      out.status = PropagateStatus::NotUnit;
      out.failed_at = id;
      return out;
    }
    if (!rest) {
      out.status = PropagateStatus::Conflict;
      return out;
    }
    mark(rest->negate());
  }
  out.status = PropagateStatus::Exhausted;
  return out;
}

PropagateOutcome propagate(const WorkingSet& w, const Clause& c, std::span<const ClauseId> antecedents) {
  Propagator p;
  return p.run(w, c, antecedents);
}

void RetiredIds::insert(std::uint64_t id) {
  if (contains(id)) return;
  auto next = intervals_.upper_bound(id);
  bool joins_next = next != intervals_.end() && next->first == id + 1;
  auto prev = next == intervals_.begin() ? intervals_.end() : std::prev(next);
  bool joins_prev = prev != intervals_.end() && prev->second + 1 == id;
  if (joins_prev && joins_next) {
    prev->second = next->second;
    intervals_.erase(next);
  } else if (joins_prev) {
    prev->second = id;
  } else if (joins_next) {
    auto hi = next->second;
    intervals_.erase(next);
    intervals_.emplace(id, hi);
  } else {
    intervals_.emplace(id, id);
  }
}

bool RetiredIds::contains(std::uint64_t id) const {
  auto it = intervals_.upper_bound(id);
  if (it == intervals_.begin()) return false;
  --it;
  return id <= it->second;
}

Checker::Checker(const Formula& f) : formula_(f), sorted_(f.clauses.size()) {
  std::iota(sorted_.begin(), sorted_.end(), 0u);
  std::sort(sorted_.begin(), sorted_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return f.clauses[a] < f.clauses[b]; });
}

bool Checker::in_formula(const Clause& c) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), c,
                             [&](std::uint32_t i, const Clause& key) { return formula_.clauses[i] < key; });
  return it != sorted_.end() && formula_.clauses[*it] == c;
}

std::optional<Verdict> Checker::apply(const ProofAction& a, std::uint64_t position) {
  return std::visit(
      [&](const auto& step) -> std::optional<Verdict> {
        using T = std::decay_t<decltype(step)>;
        if constexpr (std::is_same_v<T, DeleteStep>)
          return apply_delete(step, position);
        else if constexpr (std::is_same_v<T, OriginalStep>)
          return apply_original(step, position);
        else
          return apply_rup(step, position);
      },
      a);
}

std::optional<Verdict> Checker::apply_delete(const DeleteStep& d, std::uint64_t position) {
  for (auto id : d.ids) {
    if (!live_.erase(id))
      return Verdict::rejected({RejectionKind::DeleteUnknownId, id, {}, "clause is not live", position});
    retired_.insert(id.value);
  }
  return std::nullopt;
}

std::optional<Verdict> Checker::apply_original(const OriginalStep& o, std::uint64_t position) {
  if (!o.id.valid()) return Verdict::rejected({RejectionKind::ParseFailure, {}, {}, "clause id must be positive", position});
  if (id_taken(o.id)) return Verdict::rejected({RejectionKind::DuplicateId, o.id, {}, "id already used", position});
  if (!in_formula(o.clause))
    return Verdict::rejected({RejectionKind::OriginalNotInFormula, o.id, o.clause, "", position});
  live_.insert(o.id, o.clause);
  return std::nullopt;
}

std::optional<Verdict> Checker::apply_rup(const RupStep& r, std::uint64_t position) {
  if (!r.id.valid()) return Verdict::rejected({RejectionKind::ParseFailure, {}, {}, "clause id must be positive", position});
  // The empty clause is never stored, so its id is irrelevant.
  if (!r.clause.empty() && id_taken(r.id))
    return Verdict::rejected({RejectionKind::DuplicateId, r.id, {}, "id already used", position});

  auto outcome = propagator_.run(live_, r.clause, r.antecedents);
  last_consumed_ = outcome.consumed;
  switch (outcome.status) {
    case PropagateStatus::Conflict:
      break;
    case PropagateStatus::UnknownAntecedent:
      return Verdict::rejected({RejectionKind::UnknownAntecedent, outcome.failed_at, {}, "antecedent is not live", position});
    case PropagateStatus::NotUnit:
      return Verdict::rejected({RejectionKind::NotUnitNorEmpty, outcome.failed_at, {},
                                "antecedent leaves more than one literal", position});
    case PropagateStatus::Exhausted:
      return Verdict::rejected({RejectionKind::NotUnitNorEmpty, r.id, {},
                                "antecedents exhausted without conflict", position});
  }
  if (r.clause.empty()) return Verdict::verified(position);
  live_.insert(r.id, r.clause);
  return std::nullopt;
}

Verdict refute(const Formula& f, ActionSource& proof, CheckStats* stats) {
  Checker checker(f);
  std::uint64_t actions = 0;
  auto finish = [&](Verdict v) {
    if (stats) {
      stats->actions = actions;
      stats->live = checker.live_stats();
    }
    return v;
  };
  for (;;) {
    std::optional<ProofAction> action;
    try {
      action = proof.next();
    } catch (const ParseError& e) {
      return finish(Verdict::rejected({RejectionKind::ParseFailure, {}, {}, e.what(), e.line()}));
    }
    if (!action)
      return finish(Verdict::rejected({RejectionKind::StreamExhausted, {}, {}, "no empty clause derived", proof.position()}));
    ++actions;
    if (auto v = checker.apply(*action, proof.position())) return finish(std::move(*v));
  }
}

Verdict refute(const Formula& f, std::span<const ProofAction> proof, CheckStats* stats) {
  SpanActionSource source(proof);
  return refute(f, source, stats);
}

}  // namespace grit
