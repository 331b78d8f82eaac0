#pragma once

#include <optional>
#include <set>
#include <vector>

#include "epstein/formula.hpp"
#include "epstein/model.hpp"
#include "epstein/proof.hpp"

namespace epstein {

// Every subformula of every seed, the seeds included, sorted so that
// smaller formulas come first.
std::vector<Formula> subformula_closure(const std::vector<Formula>& seeds);

// The universe together with the single negation of each member.
std::vector<Formula> negation_extension(const std::vector<Formula>& universe);

// A finite stand-in for a maximal consistent set: within the universe,
// members is maximal among the sets that pass the system's bounded
// consistency check.
struct BoundedMcs {
  std::vector<Formula> universe;
  std::set<Formula> members;
};

// Greedy extension of sigma through the universe in size order. A
// candidate is kept when the working set stays satisfiable together with
// every instance of the system's schemas and extra axioms whose variables
// are filled from the universe. Absent when sigma itself fails that
// check. The universe must be closed under subformulas and contain sigma.
std::optional<BoundedMcs> bounded_lindenbaum(const ProofSystem& sys,
                                             const std::vector<Formula>& sigma,
                                             const std::vector<Formula>& universe);

enum class CanonicalMode { Plain, S, N, SN };

// Model read off a bounded maximal set: letters true when they are
// members, and a finite relation holding the operand pairs of the
// relatedness members. S swaps pairs, N strips leading negations from
// left operands, SN does both; each closure runs to a fixed point so the
// matching relation condition holds by construction.
Model canonical_model(const BoundedMcs& mcs, CanonicalMode mode);

}  // namespace epstein
