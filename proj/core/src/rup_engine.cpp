#include "grit/rup_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace grit {

void RupEngine::ensure_var(Variable v) {
  if (v < values_.size()) return;
  auto n = static_cast<std::size_t>(v) + 1;
  values_.resize(n, 0);
  reasons_.resize(n, kNoSlot);
  watches_.resize(2 * n);
}

void RupEngine::assign(Literal l, std::uint32_t reason) {
  values_[l.var()] = l.negative() ? -1 : 1;
  reasons_[l.var()] = reason;
  trail_.push_back(l);
}

void RupEngine::reset() {
  for (auto l : trail_) {
    values_[l.var()] = 0;
    reasons_[l.var()] = kNoSlot;
  }
  trail_.clear();
  qhead_ = 0;
  assignment_ = {};
}

void RupEngine::add_clause(ClauseId id, const Clause& clause) {
  if (slot_of_.contains(id)) throw std::invalid_argument("clause id already present: " + to_string(id));
  reset();
  ensure_var(clause.max_variable());
  auto slot = static_cast<std::uint32_t>(slots_.size());
  slots_.push_back({id, {clause.begin(), clause.end()}, true});
  slot_of_.emplace(id, slot);
  const auto& lits = slots_.back().lits;
  if (lits.empty()) {
    empties_.push_back(slot);
  } else if (lits.size() == 1) {
    units_.push_back(slot);
  } else {
    watches_[lits[0].code()].push_back({slot, lits[1]});
    watches_[lits[1].code()].push_back({slot, lits[0]});
  }
}

bool RupEngine::remove_clause(ClauseId id) {
  auto it = slot_of_.find(id);
  if (it == slot_of_.end()) return false;
  reset();
  auto& slot = slots_[it->second];
  slot.live = false;
  slot.lits = {};
  slot_of_.erase(it);
  ++dead_;
  if (dead_ > 1024 && dead_ > slot_of_.size()) collect_garbage();
  return true;
}

void RupEngine::collect_garbage() {
  std::vector<Slot> kept;
  kept.reserve(slot_of_.size());
  for (std::uint32_t s = 0; s < slots_.size(); ++s) {
    if (slots_[s].live) kept.push_back(std::move(slots_[s]));
  }
  slots_ = std::move(kept);
  for (auto& bucket : watches_) bucket.clear();
  units_.clear();
  empties_.clear();
  for (std::uint32_t s = 0; s < slots_.size(); ++s) {
    const auto& lits = slots_[s].lits;
    slot_of_[slots_[s].id] = s;
    if (lits.empty()) {
      empties_.push_back(s);
    } else if (lits.size() == 1) {
      units_.push_back(s);
    } else {
      watches_[lits[0].code()].push_back({s, lits[1]});
      watches_[lits[1].code()].push_back({s, lits[0]});
    }
  }
  dead_ = 0;
}

std::uint32_t RupEngine::propagate() {
  while (qhead_ < trail_.size()) {
    Literal falsified = trail_[qhead_++].negate();
    auto& ws = watches_[falsified.code()];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      Watch w = ws[i++];
      Slot& slot = slots_[w.slot];
      if (!slot.live) continue;
      if (value(w.blocker) == 1) {
        ws[j++] = w;
        continue;
      }
      auto& lits = slot.lits;
      if (lits[0] == falsified) std::swap(lits[0], lits[1]);
      Literal first = lits[0];
      if (value(first) == 1) {
        ws[j++] = {w.slot, first};
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (value(lits[k]) != -1) {
          std::swap(lits[1], lits[k]);
          watches_[lits[1].code()].push_back({w.slot, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = w;
      if (value(first) == -1) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        return w.slot;
      }
      assign(first, w.slot);
    }
    ws.resize(j);
  }
  return kNoSlot;
}

std::optional<std::vector<ClauseId>> RupEngine::check_rup(const Clause& c) {
  reset();
  if (c.is_tautology()) return std::nullopt;
  ensure_var(c.max_variable());

  auto dead = [&](std::uint32_t s) { return !slots_[s].live; };
  std::erase_if(units_, dead);
  std::erase_if(empties_, dead);

  std::uint32_t conflict = empties_.empty() ? kNoSlot : empties_.front();
  if (conflict == kNoSlot) {
    for (auto l : c) assign(l.negate(), kNoSlot);
    assignment_.assumed = c.size();
    for (auto s : units_) {
      Literal u = slots_[s].lits[0];
      auto v = value(u);
      if (v == -1) {
        conflict = s;
        break;
      }
      if (v == 0) assign(u, s);
    }
  }
  if (conflict == kNoSlot) conflict = propagate();

  assignment_.trail.reserve(trail_.size());
  for (auto l : trail_) {
    auto r = reasons_[l.var()];
    assignment_.trail.push_back({l, r == kNoSlot ? std::nullopt : std::optional<ClauseId>(slots_[r].id)});
  }

  if (conflict == kNoSlot) return std::nullopt;
  return used_antecedents_from(conflict);
}

std::vector<ClauseId> RupEngine::used_antecedents(ClauseId conflict) const {
  auto it = slot_of_.find(conflict);
  if (it == slot_of_.end()) throw std::invalid_argument("unknown conflict clause " + to_string(conflict));
  return used_antecedents_from(it->second);
}

std::vector<ClauseId> RupEngine::used_antecedents_from(std::uint32_t conflict) const {
  std::vector<bool> seen(values_.size(), false);
  for (auto l : slots_[conflict].lits) seen[l.var()] = true;

  std::vector<std::uint32_t> used;
  for (auto i = trail_.size(); i-- > 0;) {
    auto var = trail_[i].var();
    if (!seen[var]) continue;
    auto r = reasons_[var];
    if (r == kNoSlot) continue;
    used.push_back(r);
    for (auto l : slots_[r].lits)
      if (l.var() != var) seen[l.var()] = true;
  }

  std::vector<ClauseId> out;
  out.reserve(used.size() + 1);
  for (auto s = used.rbegin(); s != used.rend(); ++s) out.push_back(slots_[*s].id);
  out.push_back(slots_[conflict].id);
  return out;
}

std::optional<std::vector<ClauseId>> check_rup(const std::map<ClauseId, Clause>& db, const Clause& c) {
  RupEngine engine;
  for (const auto& [id, clause] : db) engine.add_clause(id, clause);
  return engine.check_rup(c);
}

}  // namespace grit
