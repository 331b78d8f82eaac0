#pragma once

#include <optional>
#include <string>

#include "epstein/relation.hpp"

namespace epstein {

// Closure conditions on relatedness relations:
//   Symmetry    <f, g> related implies <g, f> related
//   NCondition  <!f, g> related implies <f, g> related
enum class RelCondition { Symmetry, NCondition, Both };

struct ConditionVerdict {
  enum class Status { Holds, Fails, Unknown } status;
  // Fails: a pair required by the condition but absent from the relation.
  std::optional<FormulaPair> missing;
  // Fails: the pair whose presence triggers the requirement.
  std::optional<FormulaPair> present;
  std::string detail;

  bool holds() const { return status == Status::Holds; }
};

// Exact whenever the relation reduces to a finite or cofinite pair set
// (Finite, Cofinite, Full, Empty, and Override chains over those);
// Unknown otherwise.
ConditionVerdict condition_check(const Relation& r, RelCondition c);

std::string condition_name(RelCondition c);

}  // namespace epstein
