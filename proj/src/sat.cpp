#include "epstein/sat.hpp"

namespace epstein {

namespace {

inline int var_of(int lit) { return lit > 0 ? lit - 1 : -lit - 1; }
inline int sign_of(int lit) { return lit > 0 ? 1 : -1; }

}  // namespace

int SatSolver::atom_var(const Atom& a) {
  auto it = atom_vars_.find(a);
  if (it != atom_vars_.end()) return it->second;
  int v = var_count_++;
  occ_pos_.emplace_back();
  occ_neg_.emplace_back();
  atom_vars_.emplace(a, v);
  order_.push_back(a);
  return v;
}

void SatSolver::add_clause(std::vector<int> lits) {
  int idx = static_cast<int>(clauses_.size());
  for (int lit : lits) {
    (lit > 0 ? occ_pos_ : occ_neg_)[var_of(lit)].push_back(idx);
  }
  clauses_.push_back(std::move(lits));
}

int SatSolver::encode(const CplFormula& f) {
  if (auto it = gate_cache_.find(f); it != gate_cache_.end()) return it->second;
  int lit = 0;
  switch (f.kind()) {
    case CplFormula::Kind::Atom:
      lit = atom_var(f.atom_value()) + 1;
      break;
    case CplFormula::Kind::Neg:
      lit = -encode(f.child());
      break;
    case CplFormula::Kind::Bin: {
      int a = encode(f.left());
      int b = encode(f.right());
      int v = var_count_++;
      occ_pos_.emplace_back();
      occ_neg_.emplace_back();
      int g = v + 1;
      switch (f.conn()) {
        case Conn::And:
          add_clause({-g, a});
          add_clause({-g, b});
          add_clause({g, -a, -b});
          break;
        case Conn::Or:
          add_clause({g, -a});
          add_clause({g, -b});
          add_clause({-g, a, b});
          break;
        case Conn::Imp:
          add_clause({g, a});
          add_clause({g, -b});
          add_clause({-g, -a, b});
          break;
        case Conn::Iff:
          add_clause({-g, -a, b});
          add_clause({-g, a, -b});
          add_clause({g, -a, -b});
          add_clause({g, a, b});
          break;
        default:
          throw Error("unreachable");
      }
      lit = g;
      break;
    }
  }
  gate_cache_.emplace(f, lit);
  return lit;
}

void SatSolver::add(const CplFormula& f) {
  roots_.push_back(encode(f));
}

bool SatSolver::assign_and_propagate(int lit, std::vector<int>& trail) {
  std::size_t head = trail.size();
  {
    int v = var_of(lit);
    signed char want = static_cast<signed char>(sign_of(lit));
    if (value_[v] != 0) return value_[v] == want;
    value_[v] = want;
    trail.push_back(lit);
  }
  while (head < trail.size()) {
    int done = trail[head++];
    // Only clauses containing the now-false literal can become unit.
    const auto& occ = done > 0 ? occ_neg_[var_of(done)] : occ_pos_[var_of(done)];
    for (int ci : occ) {
      const auto& cls = clauses_[ci];
      int unassigned = 0;
      int unit = 0;
      bool satisfied = false;
      for (int l : cls) {
        signed char val = value_[var_of(l)];
        if (val == 0) {
          ++unassigned;
          unit = l;
        } else if (val == sign_of(l)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        int v = var_of(unit);
        value_[v] = static_cast<signed char>(sign_of(unit));
        trail.push_back(unit);
      }
    }
  }
  return true;
}

void SatSolver::undo_to(std::size_t mark, std::vector<int>& trail) {
  while (trail.size() > mark) {
    value_[var_of(trail.back())] = 0;
    trail.pop_back();
  }
}

bool SatSolver::search(std::size_t next_branch, std::vector<int>& trail) {
  while (next_branch < order_.size() && value_[atom_vars_[order_[next_branch]]] != 0) {
    ++next_branch;
  }
  if (next_branch == order_.size()) return true;
  int v = atom_vars_[order_[next_branch]];
  for (int phase : {+1, -1}) {
    std::size_t mark = trail.size();
    if (assign_and_propagate(phase * (v + 1), trail) && search(next_branch + 1, trail)) {
      return true;
    }
    undo_to(mark, trail);
  }
  return false;
}

std::optional<Assignment> SatSolver::solve() {
  value_.assign(static_cast<std::size_t>(var_count_), 0);
  std::vector<int> trail;
  for (int lit : roots_) {
    if (!assign_and_propagate(lit, trail)) return std::nullopt;
  }
  if (!search(0, trail)) return std::nullopt;
  Assignment a(false);
  for (const auto& [atom, var] : atom_vars_) {
    a.set(atom, value_[var] == 1);
  }
  return a;
}

std::optional<Assignment> SatSolver::solve_assuming(const std::vector<CplFormula>& extra) {
  std::size_t mark = roots_.size();
  for (const CplFormula& f : extra) {
    int lit = encode(f);
    roots_.push_back(lit);
  }
  std::optional<Assignment> result = solve();
  roots_.resize(mark);
  return result;
}

std::optional<Assignment> sat(const CplFormula& f) {
  SatSolver s;
  s.add(f);
  return s.solve();
}

std::optional<Assignment> sat_conj(const std::vector<CplFormula>& fs) {
  SatSolver s;
  for (const auto& f : fs) s.add(f);
  return s.solve();
}

bool is_tautology(const CplFormula& f) {
  return !sat(CplFormula::neg(f)).has_value();
}

}  // namespace epstein
