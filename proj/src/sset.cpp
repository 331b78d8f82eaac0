#include "epstein/sset.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "epstein/print.hpp"
#include "epstein/translate.hpp"

namespace epstein {

bool in_omega(const Model& m, const Formula& f, const Formula& g) {
  return !evaluate(m, Formula::imp(f, g));
}

namespace {

constexpr std::size_t kStreamMaxFormulaSize = 6;
constexpr std::size_t kStreamMaxPairSize = 7;

// Formulas over p0..p3 grouped by node count, each group in structural
// order. Built once; shared by every enumeration.
const std::vector<std::vector<Formula>>& stream_levels() {
  static const std::vector<std::vector<Formula>> levels = [] {
    std::vector<std::vector<Formula>> ls(kStreamMaxFormulaSize + 1);
    for (unsigned i = 0; i <= 3; ++i) ls[1].push_back(Formula::letter(i));
    const Conn conns[] = {Conn::And, Conn::Or,     Conn::Imp,
                          Conn::Iff, Conn::RelImp, Conn::RelConj};
    for (std::size_t s = 2; s <= kStreamMaxFormulaSize; ++s) {
      for (const auto& f : ls[s - 1]) ls[s].push_back(Formula::neg(f));
      for (Conn c : conns) {
        for (std::size_t sl = 1; sl + 2 <= s; ++sl) {
          for (const auto& l : ls[sl]) {
            for (const auto& r : ls[s - 1 - sl]) {
              ls[s].push_back(Formula::bin(c, l, r));
            }
          }
        }
      }
      std::sort(ls[s].begin(), ls[s].end());
    }
    return ls;
  }();
  return levels;
}

}  // namespace

std::vector<FormulaPair> enumerate_omega(const Model& m, std::size_t count) {
  std::vector<FormulaPair> out;
  if (count == 0) return out;
  const auto& levels = stream_levels();
  for (std::size_t total = 2; total <= kStreamMaxPairSize; ++total) {
    for (std::size_t sl = 1; sl + 1 <= total; ++sl) {
      std::size_t sr = total - sl;
      if (sl > kStreamMaxFormulaSize || sr > kStreamMaxFormulaSize) continue;
      for (const auto& f : levels[sl]) {
        for (const auto& g : levels[sr]) {
          if (in_omega(m, f, g)) {
            out.emplace_back(f, g);
            if (out.size() == count) return out;
          }
        }
      }
    }
  }
  // The bounded stream ran dry; fall back to the even-negation family,
  // whose members every model fails to conditionalize. Sizes start past
  // the stream cap, so no duplicates arise.
  for (unsigned n = 0; out.size() < count; ++n) {
    FormulaPair p(neg_tower(2 * n), Formula::bottom());
    if (in_omega(m, p)) out.push_back(p);
  }
  return out;
}

namespace {

std::optional<Formula> distinguishing_letter(const Valuation& a, const Valuation& b) {
  std::set<unsigned> keys;
  for (const auto& [k, v] : a.exceptions()) keys.insert(k);
  for (const auto& [k, v] : b.exceptions()) keys.insert(k);
  for (unsigned k : keys) {
    if (a.value(k) != b.value(k)) return Formula::letter(k);
  }
  if (a.default_value() != b.default_value()) {
    for (unsigned k = 0;; ++k) {
      if (!a.exceptions().count(k) && !b.exceptions().count(k)) return Formula::letter(k);
    }
  }
  return std::nullopt;
}

}  // namespace

MembershipVerdict sset_member(const Model& m, const Model& candidate) {
  MembershipVerdict v;
  if (auto letter = distinguishing_letter(m.valuation, candidate.valuation)) {
    v.kind = MembershipVerdict::Kind::No;
    v.distinguishing = *letter;
    v.reason = "valuations differ on " + print(*letter);
    return v;
  }
  auto diff = Relation::symmetric_difference(m.relation, candidate.relation);
  if (!diff) {
    v.kind = MembershipVerdict::Kind::Unknown;
    v.reason = "relation difference is not finitely comparable across these representations";
    return v;
  }
  for (const auto& p : *diff) {
    if (in_omega(m, p)) continue;
    v.kind = MembershipVerdict::Kind::No;
    v.witness_pair = p;
    // The pair is conditionalized by m, so one of these two formulas must
    // change truth value when its relational status flips.
    Formula rel = Formula::rel_imp(p.first, p.second);
    Formula imp = Formula::imp(p.first, p.second);
    if (evaluate(m, rel) != evaluate(candidate, rel)) {
      v.distinguishing = rel;
    } else if (evaluate(m, imp) != evaluate(candidate, imp)) {
      v.distinguishing = imp;
    }
    v.reason = "relations differ on non-toggleable pair " + print(p);
    return v;
  }
  v.kind = MembershipVerdict::Kind::Yes;
  return v;
}

std::vector<Model> sample_equivalents(const Model& m, std::size_t k, std::uint64_t seed) {
  std::vector<Model> out;
  if (k == 0) return out;
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < k) ++bits;
  ++bits;
  std::vector<FormulaPair> pairs = enumerate_omega(m, bits);

  std::vector<unsigned> perm(pairs.size());
  for (unsigned i = 0; i < perm.size(); ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng() % i]);
  }

  // Nonempty toggle subsets, smallest first, so low k stays close to m.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << bits); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t mask = masks[i];
    std::set<FormulaPair> add, remove;
    for (unsigned b = 0; b < bits; ++b) {
      if (!(mask & (std::uint64_t{1} << b))) continue;
      const FormulaPair& p = pairs[perm[b]];
      if (m.relation.contains(p)) {
        remove.insert(p);
      } else {
        add.insert(p);
      }
    }
    out.push_back(Model{m.valuation, Relation::override_with(m.relation, add, remove)});
  }
  return out;
}

bool rmin_contains(const Model& m, const Formula& f, const Formula& g) {
  return evaluate(m, Formula::rel_imp(f, g));
}

bool rmax_contains(const Model& m, const Formula& f, const Formula& g) {
  return evaluate(m, Formula::rel_imp(f, g)) || !evaluate(m, Formula::imp(f, g));
}

std::optional<std::pair<Model, Model>> falsify_sset_invariance(const CplFormula& f,
                                                               int model_samples,
                                                               int toggle_bound,
                                                               std::uint64_t seed) {
  const std::vector<Atom> atom_list = atoms(f);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < model_samples; ++s) {
    Assignment a(false);
    for (const Atom& atom : atom_list) a.set(atom, (rng() & 1) != 0);
    if (!cpl_evaluate(a, f)) continue;
    Model m = model_of(a, atom_list);

    // Only the formula's own pair atoms can move its value, and only
    // toggleable pairs keep the neighbor inside the sphere.
    std::vector<FormulaPair> toggleable;
    for (const Atom& atom : atom_list) {
      if (atom.is_pair() && in_omega(m, atom.formula_pair())) {
        toggleable.push_back(atom.formula_pair());
      }
    }
    if (toggleable.empty() || toggleable.size() > 20) continue;

    std::uint64_t mask_limit = std::uint64_t{1} << toggleable.size();
    int tried = 0;
    for (std::uint64_t mask = 1; mask < mask_limit && tried < toggle_bound; ++mask, ++tried) {
      std::set<FormulaPair> add, remove;
      for (std::size_t b = 0; b < toggleable.size(); ++b) {
        if (!(mask & (std::uint64_t{1} << b))) continue;
        const FormulaPair& p = toggleable[b];
        if (m.relation.contains(p)) {
          remove.insert(p);
        } else {
          add.insert(p);
        }
      }
      Model n{m.valuation, Relation::override_with(m.relation, add, remove)};
      if (!cpl_evaluate(assignment_of(n, atom_list), f)) {
        return std::make_pair(m, n);
      }
    }
  }
  return std::nullopt;
}

CounterexampleRecord undefinability_counterexample(RelCondition condition, const Relation& base) {
  ConditionVerdict pre = condition_check(base, condition);
  if (pre.status == ConditionVerdict::Status::Unknown) {
    throw DomainError("the " + condition_name(condition) +
                      " check is undecidable on this relation representation");
  }
  if (pre.status == ConditionVerdict::Status::Fails) {
    throw DomainError("base relation does not satisfy " + condition_name(condition) + ": " +
                      pre.detail);
  }

  FormulaPair toggled = condition == RelCondition::NCondition
                            ? FormulaPair(Formula::neg(Formula::bottom()), Formula::bottom())
                            : FormulaPair(Formula::top(), Formula::bottom());
  if (base.contains(toggled)) {
    throw DomainError("base relation already contains the pair " + print(toggled) +
                      "; adding it cannot produce a violation");
  }

  CounterexampleRecord rec{condition,
                           base,
                           Relation::override_with(base, {toggled}, {}),
                           toggled,
                           {},
                           {}};
  rec.violation = condition_check(rec.modified, condition);
  if (rec.violation.status != ConditionVerdict::Status::Fails) {
    throw Error("modified relation unexpectedly satisfies " + condition_name(condition));
  }

  std::vector<Valuation> vals;
  vals.emplace_back(false);
  vals.emplace_back(true);
  Valuation vp(false);
  vp.set(1, true);
  vals.push_back(vp);
  Valuation vq(false);
  vq.set(2, true);
  vals.push_back(vq);
  for (const auto& v : vals) {
    rec.membership_checks.emplace_back(v, sset_member(Model{v, base}, Model{v, rec.modified}));
  }
  return rec;
}

}  // namespace epstein
