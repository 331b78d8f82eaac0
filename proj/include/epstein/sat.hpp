#pragma once

#include <map>
#include <optional>
#include <vector>

#include "epstein/cpl.hpp"

namespace epstein {

// Deterministic DPLL over classical formulas. Formulas are clausified by
// fresh-variable gate encoding with structural sharing, so repeated
// subformulas across added assertions cost one gate. Search branches only
// the original atoms, in first-occurrence order, trying true before false;
// gate variables follow by unit propagation. The returned assignment is a
// pure function of the added formulas.
class SatSolver {
 public:
  void add(const CplFormula& f);

  // Satisfying assignment over the original atoms (others default false),
  // or nothing when the conjunction is unsatisfiable. Resets and replays
  // its own search state, so it can be called repeatedly and interleaved
  // with add().
  std::optional<Assignment> solve();

  // Like solve() with the extra formulas temporarily asserted. Gate
  // definitions introduced for them stay cached, which keeps repeated
  // probes against a fixed base cheap; the assertions themselves are
  // dropped again, so the solver's own constraint set is unchanged.
  std::optional<Assignment> solve_assuming(const std::vector<CplFormula>& extra);

 private:
  int atom_var(const Atom& a);
  int encode(const CplFormula& f);
  void add_clause(std::vector<int> lits);
  bool assign_and_propagate(int lit, std::vector<int>& trail);
  void undo_to(std::size_t mark, std::vector<int>& trail);
  bool search(std::size_t next_branch, std::vector<int>& trail);

  std::vector<Atom> order_;               // original atoms, branch order
  std::map<Atom, int> atom_vars_;
  std::map<CplFormula, int> gate_cache_;  // subformula -> literal
  int var_count_ = 0;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> occ_pos_; // clause indices containing +v
  std::vector<std::vector<int>> occ_neg_; // clause indices containing -v
  std::vector<int> roots_;                // asserted literals
  std::vector<signed char> value_;        // 0 unknown, 1 true, -1 false
};

std::optional<Assignment> sat(const CplFormula& f);
std::optional<Assignment> sat_conj(const std::vector<CplFormula>& fs);
bool is_tautology(const CplFormula& f);

}  // namespace epstein
