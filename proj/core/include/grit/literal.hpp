#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace grit {

using Variable = std::uint32_t;

/// Largest variable index accepted anywhere in the toolkit. Keeps a literal
/// encodable as a signed 32-bit DIMACS integer.
inline constexpr Variable kMaxVariable = 0x7fffffffu;

/// A signed reference to a propositional variable (variables start at 1).
///
/// Literals order by variable first and put the positive literal before the
/// negative one, which gives clauses a canonical sorted form.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable var, bool negative)
      : code_((static_cast<std::uint32_t>(var) << 1) | (negative ? 1u : 0u)) {}

  /// Builds a literal from its DIMACS spelling. Throws std::invalid_argument
  /// for 0 or for a magnitude above kMaxVariable.
  static Literal from_dimacs(std::int64_t value);

  constexpr Variable var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1u) != 0; }
  constexpr bool positive() const { return !negative(); }

  constexpr Literal negate() const { return from_code(code_ ^ 1u); }
  constexpr Literal operator-() const { return negate(); }

  /// Dense index 2*var + sign, suitable for per-literal arrays.
  constexpr std::uint32_t code() const { return code_; }
  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr std::int64_t to_dimacs() const {
    return negative() ? -static_cast<std::int64_t>(var()) : static_cast<std::int64_t>(var());
  }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

std::string to_string(Literal l);

/// Positive 64-bit name of a clause inside a proof.
struct ClauseId {
  std::uint64_t value = 0;

  constexpr ClauseId() = default;
  constexpr explicit ClauseId(std::uint64_t v) : value(v) {}

  constexpr bool valid() const { return value != 0; }

  friend constexpr bool operator==(ClauseId, ClauseId) = default;
  friend constexpr auto operator<=>(ClauseId, ClauseId) = default;
};

inline std::string to_string(ClauseId id) { return std::to_string(id.value); }

}  // namespace grit

template <>
struct std::hash<grit::Literal> {
  std::size_t operator()(grit::Literal l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};

template <>
struct std::hash<grit::ClauseId> {
  std::size_t operator()(grit::ClauseId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
