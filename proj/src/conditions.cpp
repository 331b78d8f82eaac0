#include "epstein/conditions.hpp"

#include "epstein/print.hpp"

namespace epstein {

std::string condition_name(RelCondition c) {
  switch (c) {
    case RelCondition::Symmetry: return "symmetry";
    case RelCondition::NCondition: return "n-condition";
    case RelCondition::Both: return "symmetry+n-condition";
  }
  return "";
}

namespace {

ConditionVerdict fails(FormulaPair missing, FormulaPair present, const std::string& what) {
  ConditionVerdict v;
  v.status = ConditionVerdict::Status::Fails;
  v.missing = std::move(missing);
  v.present = std::move(present);
  v.detail = what + ": " + print(*v.present) + " related but " + print(*v.missing) + " missing";
  return v;
}

ConditionVerdict check_symmetry(const Relation::FinCo& form) {
  if (!form.cofinite) {
    for (const auto& p : form.pairs) {
      FormulaPair swapped(p.second, p.first);
      if (!form.pairs.count(swapped)) return fails(swapped, p, "symmetry");
    }
  } else {
    // R is everything outside the excluded set, so a violation is an
    // excluded pair whose swap is not excluded.
    for (const auto& e : form.pairs) {
      FormulaPair swapped(e.second, e.first);
      if (!form.pairs.count(swapped)) return fails(e, swapped, "symmetry");
    }
  }
  return ConditionVerdict{ConditionVerdict::Status::Holds, {}, {}, ""};
}

ConditionVerdict check_n(const Relation::FinCo& form) {
  if (!form.cofinite) {
    for (const auto& p : form.pairs) {
      if (!p.first.is_neg()) continue;
      FormulaPair stripped(p.first.child(), p.second);
      if (!form.pairs.count(stripped)) return fails(stripped, p, "n-condition");
    }
  } else {
    for (const auto& e : form.pairs) {
      FormulaPair negated(Formula::neg(e.first), e.second);
      if (!form.pairs.count(negated)) return fails(e, negated, "n-condition");
    }
  }
  return ConditionVerdict{ConditionVerdict::Status::Holds, {}, {}, ""};
}

}  // namespace

ConditionVerdict condition_check(const Relation& r, RelCondition c) {
  auto form = r.finco_form();
  if (!form) {
    ConditionVerdict v;
    v.status = ConditionVerdict::Status::Unknown;
    v.detail = "membership is not reducible to a finite or cofinite pair set";
    return v;
  }
  if (c == RelCondition::Symmetry || c == RelCondition::Both) {
    auto v = check_symmetry(*form);
    if (!v.holds()) return v;
  }
  if (c == RelCondition::NCondition || c == RelCondition::Both) {
    auto v = check_n(*form);
    if (!v.holds()) return v;
  }
  return ConditionVerdict{ConditionVerdict::Status::Holds, {}, {}, ""};
}

}  // namespace epstein
