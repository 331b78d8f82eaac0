#include "epstein/lindenbaum.hpp"

#include <algorithm>
#include <utility>

#include "epstein/relation.hpp"
#include "epstein/sat.hpp"
#include "epstein/translate.hpp"

namespace epstein {

std::vector<Formula> subformula_closure(const std::vector<Formula>& seeds) {
  std::set<Formula> closed;
  for (const Formula& seed : seeds) {
    for (const Formula& sub : subformulas(seed)) closed.insert(sub);
  }
  return std::vector<Formula>(closed.begin(), closed.end());
}

std::vector<Formula> negation_extension(const std::vector<Formula>& universe) {
  std::set<Formula> extended(universe.begin(), universe.end());
  for (const Formula& f : universe) extended.insert(Formula::neg(f));
  return std::vector<Formula>(extended.begin(), extended.end());
}

namespace {

// Runs the callback on every substitution instance of the pattern whose
// variables are filled from the universe.
template <typename Callback>
void each_instance(const Formula& pattern,
                   const std::vector<Formula>& universe, Callback&& callback) {
  std::set<unsigned> vs = vars(pattern);
  std::vector<unsigned> order(vs.begin(), vs.end());
  if (order.empty()) {
    callback(pattern);
    return;
  }
  std::vector<std::size_t> odometer(order.size(), 0);
  for (;;) {
    Substitution sub;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sub.emplace(order[i], universe[odometer[i]]);
    }
    callback(substitute(sub, pattern));
    std::size_t digit = 0;
    while (digit < odometer.size() && ++odometer[digit] == universe.size()) {
      odometer[digit] = 0;
      ++digit;
    }
    if (digit == odometer.size()) return;
  }
}

}  // namespace

std::optional<BoundedMcs> bounded_lindenbaum(const ProofSystem& sys,
                                             const std::vector<Formula>& sigma,
                                             const std::vector<Formula>& universe) {
  std::set<Formula> uset(universe.begin(), universe.end());
  for (const Formula& f : universe) {
    for (const Formula& sub : proper_subformulas(f)) {
      if (!uset.count(sub)) {
        throw DomainError("universe is not closed under subformulas");
      }
    }
  }
  for (const Formula& f : sigma) {
    if (!uset.count(f)) throw DomainError("premise lies outside the universe");
  }

  std::vector<Formula> ordered(uset.begin(), uset.end());

  SatSolver solver;
  for (const AxiomSchema& schema : sys.schemas()) {
    each_instance(schema.pattern, ordered,
                  [&](const Formula& f) { solver.add(translate(f)); });
  }
  for (const Formula& extra : sys.lambda()) {
    each_instance(extra, ordered,
                  [&](const Formula& f) { solver.add(translate(f)); });
  }

  BoundedMcs mcs;
  mcs.universe = ordered;
  for (const Formula& f : sigma) {
    mcs.members.insert(f);
    solver.add(translate(f));
  }
  if (!solver.solve()) return std::nullopt;

  for (const Formula& candidate : ordered) {
    if (mcs.members.count(candidate)) continue;
    CplFormula probe = translate(candidate);
    if (solver.solve_assuming({probe})) {
      solver.add(probe);
      mcs.members.insert(candidate);
    }
  }
  return mcs;
}

Model canonical_model(const BoundedMcs& mcs, CanonicalMode mode) {
  Valuation v(false);
  std::set<FormulaPair> pairs;
  for (const Formula& f : mcs.members) {
    if (f.is_letter()) {
      v.set(f.letter_index(), true);
    } else if (f.is_bin(Conn::RelImp) || f.is_bin(Conn::RelConj)) {
      pairs.emplace(f.left(), f.right());
    }
  }

  bool swap = mode == CanonicalMode::S || mode == CanonicalMode::SN;
  bool strip = mode == CanonicalMode::N || mode == CanonicalMode::SN;
  std::vector<FormulaPair> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    FormulaPair current = work.back();
    work.pop_back();
    auto push = [&](FormulaPair next) {
      if (pairs.insert(next).second) work.push_back(std::move(next));
    };
    if (swap) push({current.second, current.first});
    if (strip && current.first.is_neg()) {
      push({current.first.child(), current.second});
    }
  }
  return Model{std::move(v), Relation::finite(std::move(pairs))};
}

}  // namespace epstein
