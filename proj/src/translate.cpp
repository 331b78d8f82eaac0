#include "epstein/translate.hpp"

#include <map>

#include "epstein/sat.hpp"

namespace epstein {

CplFormula translate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return CplFormula::atom(Atom::letter(f.letter_index()));
    case Formula::Kind::Neg:
      return CplFormula::neg(translate(f.child()));
    case Formula::Kind::Bin: {
      CplFormula l = translate(f.left());
      CplFormula r = translate(f.right());
      switch (f.conn()) {
        case Conn::RelImp:
          return CplFormula::conj(CplFormula::imp(l, r),
                                  CplFormula::atom(Atom::pair(f.left(), f.right())));
        case Conn::RelConj:
          return CplFormula::conj(CplFormula::conj(l, r),
                                  CplFormula::atom(Atom::pair(f.left(), f.right())));
        default:
          return CplFormula::bin(f.conn(), l, r);
      }
    }
  }
  throw Error("unreachable");
}

namespace {

CplFormula skeleton_walk(const Formula& f, std::map<Formula, unsigned>& ids) {
  auto opaque = [&](const Formula& g) {
    auto [it, inserted] = ids.emplace(g, static_cast<unsigned>(ids.size()));
    return CplFormula::atom(Atom::letter(it->second));
  };
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return opaque(f);
    case Formula::Kind::Neg:
      return CplFormula::neg(skeleton_walk(f.child(), ids));
    case Formula::Kind::Bin: {
      if (f.conn() == Conn::RelImp || f.conn() == Conn::RelConj) return opaque(f);
      CplFormula left = skeleton_walk(f.left(), ids);
      CplFormula right = skeleton_walk(f.right(), ids);
      return CplFormula::bin(f.conn(), left, right);
    }
  }
  throw Error("unreachable");
}

}  // namespace

CplFormula skeleton(const Formula& f) {
  std::map<Formula, unsigned> ids;
  return skeleton_walk(f, ids);
}

Assignment assignment_of(const Model& m, const std::vector<Atom>& atom_list) {
  Assignment a(false);
  for (const Atom& atom : atom_list) {
    if (atom.is_letter()) {
      a.set(atom, m.valuation.value(atom.index()));
    } else {
      a.set(atom, m.relation.contains(atom.formula_pair()));
    }
  }
  return a;
}

Model model_of(const Assignment& a, const std::vector<Atom>& atom_list) {
  Valuation v(false);
  std::set<FormulaPair> pairs;
  for (const Atom& atom : atom_list) {
    if (atom.is_letter()) {
      v.set(atom.index(), a.value(atom));
    } else if (a.value(atom)) {
      pairs.insert(atom.formula_pair());
    }
  }
  return Model{v, Relation::finite(std::move(pairs))};
}

bool invariant_on(const Model& m, const Formula& f) {
  CplFormula st = translate(f);
  Assignment a = assignment_of(m, atoms(st));
  return evaluate(m, f) == cpl_evaluate(a, st);
}

bool f_valid(const Formula& f) {
  return !sat(CplFormula::neg(translate(f))).has_value();
}

bool f_consequence(const std::vector<Formula>& premises, const Formula& f) {
  std::vector<CplFormula> parts;
  parts.reserve(premises.size() + 1);
  for (const auto& p : premises) parts.push_back(translate(p));
  parts.push_back(CplFormula::neg(translate(f)));
  return !sat_conj(parts).has_value();
}

std::optional<Model> countermodel(const Formula& f) {
  CplFormula st = translate(f);
  auto a = sat(CplFormula::neg(st));
  if (!a) return std::nullopt;
  return model_of(*a, atoms(st));
}

}  // namespace epstein
