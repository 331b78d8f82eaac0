#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epstein/model.hpp"

namespace epstein {

struct WitnessCheck {
  std::string description;
  std::size_t count = 0;
  bool pass = false;
};

// Machine-checked rendition of one incompleteness or inexpressibility
// argument: the constructed objects in printable form plus every check that
// was run against them.
struct WitnessReport {
  std::string lemma;
  std::map<std::string, std::string> objects;
  std::vector<WitnessCheck> checks;
  bool verdict() const;
};

// One-line description of a relation for report objects.
std::string relation_brief(const Relation& r);

// alpha = p -> (q ~> p). Relations validating every substitution instance of
// alpha must relate <p, p>; the report either exhibits the falsifying
// instance (q := p under the all-true valuation) or confirms p ~> p together
// with sampled instances.
WitnessReport alpha_forces_pp(const Relation& r, std::size_t sample, std::uint64_t seed);

// The model <all-false, everything but <p, p>> satisfies every substitution
// instance of alpha yet falsifies p ~> p, so no set of relations pins down
// exactly the alpha-generated logic.
WitnessReport alpha_nonderivability_model();

// Distinct index sets T, V give distinct tower logics: dropping <p, p^n> for
// n in the symmetric difference falsifies that tower while every instance
// over the other set still holds.
WitnessReport kt_separation(const std::set<unsigned>& t, const std::set<unsigned>& v);

// The q ~> p^n towers semantically force p ~> p (check i), yet the cofinite
// model of alpha_nonderivability_model satisfies all their instances while
// falsifying p ~> p (check ii).
WitnessReport lambda_incompleteness(const std::set<unsigned>& s, std::size_t sample);

// Per-level tallies of the expressibility sweep: candidate formulas over the
// atoms p, q, T, F with exactly `level` connectives, how many of them the
// witness relation {<T, F>} validates, and how many pass the full
// biconditional test against the empty relation (expected: none).
struct SweepLevel {
  std::uint64_t formulas = 0;
  std::uint64_t validated = 0;
  std::uint64_t survivors = 0;
};

// Exact tallies via truth-vector classes; no formula is materialized, so
// large bounds stay cheap.
std::vector<SweepLevel> inexpressibility_levels(unsigned size_bound);

// Literal re-enumeration that builds every candidate and calls
// relation_validates on both relations. Exponential; bounds above 3 throw
// CapacityError. jobs > 1 splits the tally across OpenMP threads.
std::vector<SweepLevel> inexpressibility_reference(unsigned size_bound, int jobs = 1);

// Full sweep report: per-level zero-survivor checks plus the two specific
// eliminations quoted in the classical argument.
WitnessReport inexpressibility_sweep(unsigned size_bound);

}  // namespace epstein
