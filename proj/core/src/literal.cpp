#include "grit/literal.hpp"

#include <stdexcept>

namespace grit {

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0) throw std::invalid_argument("0 is not a literal");
  if (value < -static_cast<std::int64_t>(kMaxVariable) || value > static_cast<std::int64_t>(kMaxVariable))
    throw std::invalid_argument("variable index out of range: " + std::to_string(value));
  return value > 0 ? Literal(static_cast<Variable>(value), false)
                   : Literal(static_cast<Variable>(-value), true);
}

std::string to_string(Literal l) { return std::to_string(l.to_dimacs()); }

}  // namespace grit
