#include "grit/proof.hpp"

namespace grit {
namespace {

void append_ids(std::string& out, const std::vector<ClauseId>& ids) {
  for (auto id : ids) {
    out += std::to_string(id.value);
    out += ' ';
  }
}

void append_clause(std::string& out, const Clause& c) {
  for (auto l : c) {
    out += to_string(l);
    out += ' ';
  }
  out += "0 ";
}

}  // namespace

std::string to_string(const ProofAction& a) {
  std::string out;
  if (const auto* d = std::get_if<DeleteStep>(&a)) {
    out += "0 ";
    append_ids(out, d->ids);
  } else if (const auto* o = std::get_if<OriginalStep>(&a)) {
    out += std::to_string(o->id.value) + ' ';
    append_clause(out, o->clause);
  } else {
    const auto& r = std::get<RupStep>(a);
    out += std::to_string(r.id.value) + ' ';
    append_clause(out, r.clause);
    append_ids(out, r.antecedents);
  }
  out += '0';
  return out;
}

}  // namespace grit
