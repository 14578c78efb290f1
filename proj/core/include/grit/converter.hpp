#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grit/formula.hpp"
#include "grit/proof.hpp"

namespace grit {

enum class ConvertErrorKind {
  RupFailed,      // a DRUP lemma is not RUP over the live clauses
  DeleteMissing,  // a DRUP deletion names no live clause
  NoEmptyClause,  // the DRUP proof ends before adding the empty clause
  TrimOnInvalid,  // backward_trim was handed a proof that does not verify
};

std::string_view to_string(ConvertErrorKind kind);

class ConvertError : public std::runtime_error {
 public:
  ConvertError(ConvertErrorKind kind, std::uint64_t line, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + " at line " + std::to_string(line) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        line_(line) {}

  ConvertErrorKind kind() const { return kind_; }
  std::uint64_t line() const { return line_; }

 private:
  ConvertErrorKind kind_;
  std::uint64_t line_;
};

struct ConvertOptions {
  /// Keep only lemmas reachable from the empty clause, introduce originals
  /// just before first use and delete every clause right after its last use.
  /// Buffers the forward result in memory.
  bool trim = false;
};

struct ConvertSummary {
  std::uint64_t lemmas_total = 0;
  std::uint64_t lemmas_kept = 0;
  std::uint64_t lemmas_dropped = 0;
  std::uint64_t originals_emitted = 0;
  std::uint64_t deletions_emitted = 0;  // clause ids, not lines
  std::uint64_t lines_emitted = 0;
};

using ActionSink = std::function<void(const ProofAction&)>;

/// DRUP to GRIT. Originals get ids 1..n in formula order, lemmas get n+1,
/// n+2, ... in proof order. Each lemma is checked by full unit propagation
/// and emitted with the antecedent order that propagation used. Output stops
/// at the first derived empty clause. Throws ConvertError.
ConvertSummary convert(const Formula& f, DrupSource& drup, const ConvertOptions& options, const ActionSink& sink);
std::vector<ProofAction> convert(const Formula& f, std::span<const DrupAction> drup, const ConvertOptions& options,
                                 ConvertSummary* summary = nullptr);

/// Keeps the final empty-clause step and everything it transitively cites,
/// truncating each antecedent list to the prefix the checker consumes.
/// Original steps move to just before their first use; input deletions are
/// replaced by deletions right after each clause's last use. Throws
/// ConvertError(TrimOnInvalid) if `proof` does not verify against `f`.
std::vector<ProofAction> backward_trim(const Formula& f, std::span<const ProofAction> proof,
                                       ConvertSummary* summary = nullptr);

}  // namespace grit
