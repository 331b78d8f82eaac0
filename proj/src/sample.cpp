#include "epstein/sample.hpp"

#include <utility>
#include <vector>

namespace epstein {

Formula Sampler::formula(unsigned depth, unsigned letters) {
  if (depth == 0) return Formula::letter(1 + static_cast<unsigned>(next(letters)));
  switch (next(10)) {
    case 0:
    case 1:
    case 2:
      return Formula::letter(1 + static_cast<unsigned>(next(letters)));
    case 3:
      return Formula::neg(formula(depth - 1, letters));
    case 4:
      return Formula::conj(formula(depth - 1, letters), formula(depth - 1, letters));
    case 5:
      return Formula::disj(formula(depth - 1, letters), formula(depth - 1, letters));
    case 6:
      return Formula::imp(formula(depth - 1, letters), formula(depth - 1, letters));
    case 7:
      return Formula::iff(formula(depth - 1, letters), formula(depth - 1, letters));
    case 8:
      return Formula::rel_imp(formula(depth - 1, letters), formula(depth - 1, letters));
    default:
      return Formula::rel_conj(formula(depth - 1, letters), formula(depth - 1, letters));
  }
}

Formula Sampler::classical_formula(unsigned depth, unsigned letters) {
  if (depth == 0) return Formula::letter(1 + static_cast<unsigned>(next(letters)));
  switch (next(8)) {
    case 0:
    case 1:
    case 2:
      return Formula::letter(1 + static_cast<unsigned>(next(letters)));
    case 3:
      return Formula::neg(classical_formula(depth - 1, letters));
    case 4:
      return Formula::conj(classical_formula(depth - 1, letters),
                           classical_formula(depth - 1, letters));
    case 5:
      return Formula::disj(classical_formula(depth - 1, letters),
                           classical_formula(depth - 1, letters));
    case 6:
      return Formula::imp(classical_formula(depth - 1, letters),
                          classical_formula(depth - 1, letters));
    default:
      return Formula::iff(classical_formula(depth - 1, letters),
                          classical_formula(depth - 1, letters));
  }
}

Substitution Sampler::substitution(const std::set<unsigned>& vars, unsigned depth,
                                   unsigned letters) {
  Substitution s;
  for (unsigned v : vars) s.emplace(v, formula(depth, letters));
  return s;
}

Valuation Sampler::valuation(unsigned letters) {
  Valuation v(coin());
  for (unsigned i = 1; i <= letters; ++i) v.set(i, coin());
  return v;
}

std::set<FormulaPair> Sampler::pair_set(unsigned max_pairs, unsigned depth, unsigned letters) {
  std::set<FormulaPair> pairs;
  unsigned n = static_cast<unsigned>(next(max_pairs + 1));
  for (unsigned i = 0; i < n; ++i) {
    pairs.emplace(formula(depth, letters), formula(depth, letters));
  }
  return pairs;
}

Relation Sampler::finite_relation(unsigned max_pairs, unsigned depth, unsigned letters) {
  return Relation::finite(pair_set(max_pairs, depth, letters));
}

Relation Sampler::symmetric_relation(unsigned max_pairs, unsigned depth, unsigned letters) {
  std::set<FormulaPair> pairs = pair_set(max_pairs, depth, letters);
  std::set<FormulaPair> closed = pairs;
  for (const auto& p : pairs) closed.emplace(p.second, p.first);
  return Relation::finite(std::move(closed));
}

namespace {

// Smallest superset closed under dropping a leading negation of the first
// coordinate.
void close_under_strip(std::set<FormulaPair>& pairs) {
  std::vector<FormulaPair> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    FormulaPair p = work.back();
    work.pop_back();
    if (!p.first.is_neg()) continue;
    FormulaPair stripped(p.first.child(), p.second);
    if (pairs.insert(stripped).second) work.push_back(stripped);
  }
}

}  // namespace

Relation Sampler::n_closed_relation(unsigned max_pairs, unsigned depth, unsigned letters) {
  std::set<FormulaPair> pairs = pair_set(max_pairs, depth, letters);
  close_under_strip(pairs);
  return Relation::finite(std::move(pairs));
}

Relation Sampler::sn_closed_relation(unsigned max_pairs, unsigned depth, unsigned letters) {
  std::set<FormulaPair> pairs = pair_set(max_pairs, depth, letters);
  for (;;) {
    std::set<FormulaPair> before = pairs;
    for (const auto& p : before) pairs.emplace(p.second, p.first);
    close_under_strip(pairs);
    if (pairs.size() == before.size()) break;
  }
  return Relation::finite(std::move(pairs));
}

Relation Sampler::relation(unsigned depth, unsigned letters) {
  switch (next(6)) {
    case 0:
      return finite_relation(4, depth, letters);
    case 1:
      return Relation::cofinite(pair_set(4, depth, letters));
    case 2:
      return Relation::full();
    case 3:
      return Relation::empty();
    case 4: {
      std::set<unsigned> indices;
      unsigned n = 1 + static_cast<unsigned>(next(3));
      for (unsigned i = 0; i < n; ++i) indices.insert(1 + static_cast<unsigned>(next(8)));
      auto variant = coin() ? Relation::TowerVariant::R0T
                            : Relation::TowerVariant::SupersetClosure;
      return Relation::tower(std::move(indices), variant);
    }
    default: {
      Relation base = [&] {
        switch (next(4)) {
          case 0:
            return finite_relation(3, depth, letters);
          case 1:
            return Relation::cofinite(pair_set(3, depth, letters));
          case 2:
            return Relation::full();
          default:
            return Relation::empty();
        }
      }();
      std::set<FormulaPair> add = pair_set(3, depth, letters);
      std::set<FormulaPair> remove;
      for (const auto& p : pair_set(3, depth, letters)) {
        if (!add.count(p)) remove.insert(p);
      }
      return Relation::override_with(std::move(base), std::move(add), std::move(remove));
    }
  }
}

Model Sampler::model(unsigned depth, unsigned letters) {
  Valuation v = valuation(letters);
  Relation r = relation(depth, letters);
  return Model{std::move(v), std::move(r)};
}

}  // namespace epstein
