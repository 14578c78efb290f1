#include "grit/converter.hpp"

#include <map>
#include <unordered_map>
#include <unordered_set>

#include "grit/checker.hpp"
#include "grit/rup_engine.hpp"

namespace grit {

std::string_view to_string(ConvertErrorKind kind) {
  switch (kind) {
    case ConvertErrorKind::RupFailed: return "RupFailed";
    case ConvertErrorKind::DeleteMissing: return "DeleteMissing";
    case ConvertErrorKind::NoEmptyClause: return "NoEmptyClause";
    case ConvertErrorKind::TrimOnInvalid: return "TrimOnInvalid";
  }
  return "Unknown";
}

namespace {

ConvertSummary convert_forward(const Formula& f, DrupSource& drup, const ActionSink& sink) {
  ConvertSummary summary;
  auto emit = [&](const ProofAction& a) {
    ++summary.lines_emitted;
    sink(a);
  };

  RupEngine engine;
  std::map<Clause, std::vector<ClauseId>> by_clause;
  std::uint64_t next_id = 1;
  for (const auto& c : f.clauses) {
    ClauseId id{next_id++};
    emit(OriginalStep{id, c});
    ++summary.originals_emitted;
    engine.add_clause(id, c);
    by_clause[c].push_back(id);
  }

  while (auto action = drup.next()) {
    const Clause& c = action->clause;
    if (action->kind == DrupAction::Kind::Add) {
      auto order = engine.check_rup(c);
      if (!order) throw ConvertError(ConvertErrorKind::RupFailed, drup.position(), "lemma '" + to_string(c) + " 0'");
      ClauseId id{next_id++};
      ++summary.lemmas_total;
      emit(RupStep{id, c, std::move(*order)});
      if (c.empty()) {
        summary.lemmas_kept = summary.lemmas_total;
        return summary;
      }
      engine.add_clause(id, c);
      by_clause[c].push_back(id);
    } else {
      auto it = by_clause.find(c);
      if (it == by_clause.end() || it->second.empty())
        throw ConvertError(ConvertErrorKind::DeleteMissing, drup.position(), "clause '" + to_string(c) + " 0'");
      // Most recently added copy goes first.
      ClauseId id = it->second.back();
      it->second.pop_back();
      if (it->second.empty()) by_clause.erase(it);
      engine.remove_clause(id);
      emit(DeleteStep{{id}});
      ++summary.deletions_emitted;
    }
  }
  throw ConvertError(ConvertErrorKind::NoEmptyClause, drup.position(), "proof ends without the empty clause");
}

const ClauseId& step_id(const ProofAction& a) {
  if (const auto* o = std::get_if<OriginalStep>(&a)) return o->id;
  return std::get<RupStep>(a).id;
}

}  // namespace

ConvertSummary convert(const Formula& f, DrupSource& drup, const ConvertOptions& options, const ActionSink& sink) {
  if (!options.trim) return convert_forward(f, drup, sink);

  std::vector<ProofAction> buffered;
  auto forward = convert_forward(f, drup, [&](const ProofAction& a) { buffered.push_back(a); });
  ConvertSummary summary;
  auto trimmed = backward_trim(f, buffered, &summary);
  summary.lemmas_total = forward.lemmas_total;
  summary.lemmas_dropped = summary.lemmas_total - summary.lemmas_kept;
  for (const auto& a : trimmed) sink(a);
  return summary;
}

std::vector<ProofAction> convert(const Formula& f, std::span<const DrupAction> drup, const ConvertOptions& options,
                                 ConvertSummary* summary) {
  SpanDrupSource source(drup);
  std::vector<ProofAction> out;
  auto s = convert(f, source, options, [&](const ProofAction& a) { out.push_back(a); });
  if (summary) *summary = s;
  return out;
}

std::vector<ProofAction> backward_trim(const Formula& f, std::span<const ProofAction> proof, ConvertSummary* summary) {
  // Forward replay: find the verifying step and how much of each antecedent
  // list the checker actually consumed.
  Checker checker(f);
  std::vector<std::size_t> consumed(proof.size(), 0);
  std::size_t last = proof.size();
  for (std::size_t i = 0; i < proof.size(); ++i) {
    auto verdict = checker.apply(proof[i], i + 1);
    if (std::holds_alternative<RupStep>(proof[i])) consumed[i] = checker.last_consumed();
    if (!verdict) continue;
    if (!verdict->is_verified()) throw ConvertError(ConvertErrorKind::TrimOnInvalid, i + 1, verdict->describe());
    last = i;
    break;
  }
  if (last == proof.size())
    throw ConvertError(ConvertErrorKind::TrimOnInvalid, proof.size(), "proof does not derive the empty clause");

  // Ids are never reused, so each id has exactly one defining step.
  std::unordered_map<ClauseId, std::size_t> defined_at;
  for (std::size_t i = 0; i < last; ++i)
    if (!std::holds_alternative<DeleteStep>(proof[i])) defined_at.emplace(step_id(proof[i]), i);

  auto used = [&](std::size_t i) {
    const auto& r = std::get<RupStep>(proof[i]);
    return std::span<const ClauseId>(r.antecedents).first(consumed[i]);
  };

  std::vector<char> keep(last + 1, 0);
  keep[last] = 1;
  for (std::size_t i = last + 1; i-- > 0;) {
    if (!keep[i] || !std::holds_alternative<RupStep>(proof[i])) continue;
    for (auto a : used(i)) keep[defined_at.at(a)] = 1;
  }

  std::unordered_map<ClauseId, std::size_t> last_use;
  for (std::size_t i = 0; i <= last; ++i) {
    if (!keep[i] || !std::holds_alternative<RupStep>(proof[i])) continue;
    for (auto a : used(i)) last_use[a] = i;
  }

  ConvertSummary s;
  std::vector<ProofAction> out;
  std::unordered_set<ClauseId> introduced;
  for (std::size_t i = 0; i <= last; ++i) {
    if (!keep[i]) continue;
    const auto* r = std::get_if<RupStep>(&proof[i]);
    if (r == nullptr) continue;  // originals are introduced on demand
    auto ants = used(i);
    for (auto a : ants) {
      const auto& def = proof[defined_at.at(a)];
      if (std::holds_alternative<OriginalStep>(def) && introduced.insert(a).second) {
        out.push_back(def);
        ++s.originals_emitted;
      }
    }
    out.push_back(RupStep{r->id, r->clause, {ants.begin(), ants.end()}});
    ++s.lemmas_kept;
    if (i == last) break;

    DeleteStep dead;
    for (auto a : ants) {
      auto it = last_use.find(a);
      if (it != last_use.end() && it->second == i) {
        dead.ids.push_back(a);
        last_use.erase(it);
      }
    }
    if (!dead.ids.empty()) {
      s.deletions_emitted += dead.ids.size();
      out.push_back(std::move(dead));
    }
  }

  std::uint64_t lemmas_in = 0;
  for (std::size_t i = 0; i <= last; ++i) lemmas_in += std::holds_alternative<RupStep>(proof[i]) ? 1 : 0;
  s.lemmas_total = lemmas_in;
  s.lemmas_dropped = lemmas_in - s.lemmas_kept;
  s.lines_emitted = out.size();
  if (summary) *summary = s;
  return out;
}

}  // namespace grit
