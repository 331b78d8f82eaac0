#pragma once

#include <optional>
#include <vector>

#include "epstein/cpl.hpp"
#include "epstein/model.hpp"

namespace epstein {

// Standard translation into the classical language: homomorphic on the
// classical connectives, and
//   St(f ~> g) = St(f -> g) & a<f,g>
//   St(f ^ g)  = (St(f) & St(g)) & a<f,g>
// where a<f,g> is the pair atom indexed by the untranslated operands.
CplFormula translate(const Formula& f);

// Classical shape of a formula: every maximal relatedness subformula and
// every letter becomes an atom (fresh letters, numbered by first
// occurrence; identical subformulas share one atom).
CplFormula skeleton(const Formula& f);

// Reads the given atoms off a model: letters from the valuation, pair atoms
// from the relation.
Assignment assignment_of(const Model& m, const std::vector<Atom>& atom_list);

// Builds a model realizing an assignment on the given atoms: letters feed
// the valuation (default false), true pair atoms form a finite relation.
Model model_of(const Assignment& a, const std::vector<Atom>& atom_list);

// Truth in m agrees with classical truth of the translation under the
// assignment read off m. Foundation for everything SAT-driven here.
bool invariant_on(const Model& m, const Formula& f);

bool f_valid(const Formula& f);
bool f_consequence(const std::vector<Formula>& premises, const Formula& f);

// A model falsifying f, when f is not valid.
std::optional<Model> countermodel(const Formula& f);

}  // namespace epstein
