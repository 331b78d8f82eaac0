#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epstein/formula.hpp"
#include "epstein/model.hpp"

namespace epstein {

// A pair of finite formula sets: gamma to be made true, sigma to be made
// false. Realisable when one model does both at once.
struct InterpPair {
  std::set<Formula> gamma;
  std::set<Formula> sigma;
};

// Exact decision via translation satisfiability; on success the
// satisfying assignment is read back as a model.
std::optional<Model> realisable(const InterpPair& t);

// True when chi uses only variables shared between the two sides and
// neither <gamma,{chi}> nor <{chi},sigma> is realisable. The constants
// (the designated tautology and its negation) are treated as variable
// free, so they may separate pairs with no shared letters at all.
bool separates(const Formula& chi, const InterpPair& t);

// Bounded separator search over the shared vocabulary: the two
// constants, formulas with at most `depth` connectives over the shared
// letters, and relatedness pairs (plus their single negations) over the
// shared-variable subformulas of the pair. Candidates are tried in size
// order; absence means no separator within the bound, not that none
// exists. jobs > 1 scans the candidate list in parallel and still
// returns the earliest hit.
std::optional<Formula> find_separator(const InterpPair& t, unsigned depth,
                                      int jobs = 1);

struct TraceStep {
  InterpPair pair;
  std::string branch;
  bool separator_found;
};

struct SaturationResult {
  InterpPair final_pair;
  std::vector<TraceStep> trace;
};

// Two-phase pair extension: each proper subformula of phi joins gamma
// unsigned when the extended pair has no separator within `depth`,
// negated otherwise; then the same over psi's proper subformulas on the
// sigma side. The trace records the pair after each step, the branch
// taken, and whether a separator was found for the unsigned probe.
SaturationResult saturate(const Formula& phi, const Formula& psi,
                          unsigned depth);

// Model read off a saturated pair: letters true when listed in gamma or
// negated in sigma; the relation holds the operand pairs of relatedness
// formulas listed in gamma or negated in sigma.
Model model_from_pair(const InterpPair& t);

struct InterpolationResult {
  Formula interpolant;
  bool left_check;
  bool right_check;
  bool var_check;
  std::vector<TraceStep> trace;
};

// Interpolant for a valid implication phi -> psi, found as a separator
// of <{phi},{psi}> and then verified from scratch: phi -> interpolant
// and interpolant -> psi must be valid and the variable condition must
// hold. Absent when the depth bound is exhausted; throws when the
// implication is not valid to begin with.
std::optional<InterpolationResult> interpolate(const Formula& phi,
                                               const Formula& psi,
                                               unsigned depth, int jobs = 1);

// The model with everything false and the empty relation, which
// falsifies every relatedness implication; built as a reminder that no
// formula of that shape is valid, so interpolation for the relatedness
// arrow holds vacuously.
Model rel_imp_noninterpolation_demo();

}  // namespace epstein
