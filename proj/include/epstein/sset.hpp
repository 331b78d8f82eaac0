#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epstein/conditions.hpp"
#include "epstein/cpl.hpp"
#include "epstein/model.hpp"

namespace epstein {

// <f, g> lies in the toggle set of m: m fails f -> g, so relating or
// unrelating the pair cannot change the theory of m.
bool in_omega(const Model& m, const Formula& f, const Formula& g);
inline bool in_omega(const Model& m, const FormulaPair& p) {
  return in_omega(m, p.first, p.second);
}

// First `count` toggleable pairs in a fixed deterministic order: pairs of
// small formulas over p0..p3 by (combined size, structure), then the
// always-toggleable family <!!...!T, F> with even negation depth. The tail
// makes the enumeration inexhaustible for every model.
std::vector<FormulaPair> enumerate_omega(const Model& m, std::size_t count);

struct MembershipVerdict {
  enum class Kind { Yes, No, Unknown } kind = Kind::Unknown;
  std::string reason;
  // No: a formula with different truth values in the two models.
  std::optional<Formula> distinguishing;
  // No via the relations: the differing pair outside the toggle set.
  std::optional<FormulaPair> witness_pair;

  bool yes() const { return kind == Kind::Yes; }
};

// Does `candidate` lie in the equivalence sphere of m: same valuation, and
// relations differing only on toggleable pairs. Unknown when the relation
// difference is not finitely comparable across representations.
MembershipVerdict sset_member(const Model& m, const Model& candidate);

// k pairwise-distinct sphere members, built by toggling subsets of
// enumerate_omega(m, ceil(log2 k) + 1). Deterministic in seed.
std::vector<Model> sample_equivalents(const Model& m, std::size_t k, std::uint64_t seed);

// Boundary relations of the sphere: the least relation supports exactly the
// relational implications in the theory of m; the greatest additionally
// relates every pair whose implication m falsifies.
bool rmin_contains(const Model& m, const Formula& f, const Formula& g);
bool rmax_contains(const Model& m, const Formula& f, const Formula& g);

// Searches for a sphere violation of a classical formula: a model making it
// true with a toggled neighbor making it false. Translations never yield a
// witness; bare pair atoms do.
std::optional<std::pair<Model, Model>> falsify_sset_invariance(const CplFormula& f,
                                                               int model_samples,
                                                               int toggle_bound,
                                                               std::uint64_t seed);

// Toggling one always-toggleable pair breaks a closure condition without
// changing any theory, so the condition is not expressible in the language.
struct CounterexampleRecord {
  RelCondition condition;
  Relation base;
  Relation modified;
  FormulaPair toggled;
  ConditionVerdict violation;
  std::vector<std::pair<Valuation, MembershipVerdict>> membership_checks;
};

CounterexampleRecord undefinability_counterexample(RelCondition condition, const Relation& base);

}  // namespace epstein
