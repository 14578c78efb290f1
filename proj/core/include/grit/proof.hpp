#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "grit/formula.hpp"

namespace grit {

/// "0 ids 0": drop clauses from the working set. May be empty.
struct DeleteStep {
  std::vector<ClauseId> ids;
  friend bool operator==(const DeleteStep&, const DeleteStep&) = default;
};

/// "id lits 0 0": bring a clause of the input formula into the working set.
struct OriginalStep {
  ClauseId id;
  Clause clause;
  friend bool operator==(const OriginalStep&, const OriginalStep&) = default;
};

/// "id lits 0 ids 0": a clause justified by unit propagation over the listed
/// antecedents, in the order given.
struct RupStep {
  ClauseId id;
  Clause clause;
  std::vector<ClauseId> antecedents;
  friend bool operator==(const RupStep&, const RupStep&) = default;
};

using ProofAction = std::variant<DeleteStep, OriginalStep, RupStep>;

std::string to_string(const ProofAction& a);

/// Pull-based sequence of proof actions.
class ActionSource {
 public:
  virtual ~ActionSource() = default;
  /// Next action, or nullopt at end. Parsing sources throw ParseError.
  virtual std::optional<ProofAction> next() = 0;
  /// Position of the action last returned (1-based line or index).
  virtual std::uint64_t position() const = 0;
};

/// Source over an in-memory proof; positions are 1-based indices.
class SpanActionSource final : public ActionSource {
 public:
  explicit SpanActionSource(std::span<const ProofAction> actions) : actions_(actions) {}
  std::optional<ProofAction> next() override {
    if (index_ == actions_.size()) return std::nullopt;
    return actions_[index_++];
  }
  std::uint64_t position() const override { return index_; }

 private:
  std::span<const ProofAction> actions_;
  std::size_t index_ = 0;
};

struct DrupAction {
  enum class Kind { Add, Delete };
  Kind kind = Kind::Add;
  Clause clause;

  static DrupAction add(Clause c) { return {Kind::Add, std::move(c)}; }
  static DrupAction remove(Clause c) { return {Kind::Delete, std::move(c)}; }

  friend bool operator==(const DrupAction&, const DrupAction&) = default;
};

class DrupSource {
 public:
  virtual ~DrupSource() = default;
  virtual std::optional<DrupAction> next() = 0;
  virtual std::uint64_t position() const = 0;
};

class SpanDrupSource final : public DrupSource {
 public:
  explicit SpanDrupSource(std::span<const DrupAction> actions) : actions_(actions) {}
  std::optional<DrupAction> next() override {
    if (index_ == actions_.size()) return std::nullopt;
    return actions_[index_++];
  }
  std::uint64_t position() const override { return index_; }

 private:
  std::span<const DrupAction> actions_;
  std::size_t index_ = 0;
};

}  // namespace grit
