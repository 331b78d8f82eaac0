#include "epstein/relation.hpp"

#include <algorithm>

namespace epstein {

Relation Relation::finite(std::set<FormulaPair> pairs) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Finite;
  r->pairs = std::move(pairs);
  return Relation(std::move(r));
}

Relation Relation::cofinite(std::set<FormulaPair> excluded) {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Cofinite;
  r->pairs = std::move(excluded);
  return Relation(std::move(r));
}

Relation Relation::full() {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Full;
  return Relation(std::move(r));
}

Relation Relation::empty() {
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Empty;
  return Relation(std::move(r));
}

Relation Relation::tower(std::set<unsigned> indices, TowerVariant variant) {
  if (indices.empty() || *indices.begin() < 1) {
    throw DomainError("tower indices must be a nonempty set of naturals >= 1");
  }
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Tower;
  r->indices = std::move(indices);
  r->variant = variant;
  return Relation(std::move(r));
}

Relation Relation::override_with(Relation base, std::set<FormulaPair> add,
                                 std::set<FormulaPair> remove) {
  for (const auto& p : add) {
    if (remove.count(p)) throw DomainError("override add and remove sets must be disjoint");
  }
  auto r = std::make_shared<Rep>();
  r->kind = Kind::Override;
  r->pairs = std::move(add);
  r->removed = std::move(remove);
  r->base = base.rep_;
  return Relation(std::move(r));
}

const std::set<FormulaPair>& Relation::pairs() const {
  if (rep_->kind != Kind::Finite && rep_->kind != Kind::Cofinite) {
    throw Error("pairs() on relation without a pair list");
  }
  return rep_->pairs;
}

const std::set<unsigned>& Relation::indices() const {
  if (rep_->kind != Kind::Tower) throw Error("indices() on non-tower relation");
  return rep_->indices;
}

Relation::TowerVariant Relation::variant() const {
  if (rep_->kind != Kind::Tower) throw Error("variant() on non-tower relation");
  return rep_->variant;
}

Relation Relation::base() const {
  if (rep_->kind != Kind::Override) throw Error("base() on non-override relation");
  return Relation(rep_->base);
}

const std::set<FormulaPair>& Relation::added() const {
  if (rep_->kind != Kind::Override) throw Error("added() on non-override relation");
  return rep_->pairs;
}

const std::set<FormulaPair>& Relation::removed() const {
  if (rep_->kind != Kind::Override) throw Error("removed() on non-override relation");
  return rep_->removed;
}

namespace {

// second == first -> (first -> ... first) with k arrows for some k in the
// index set. Stripping outer implications whose antecedent equals `first`
// is unambiguous, so the depth is unique.
bool tower_member(const std::set<unsigned>& indices, const Formula& first,
                  const Formula& second) {
  unsigned k = 0;
  Formula cur = second;
  while (cur != first) {
    if (!cur.is_bin(Conn::Imp) || cur.left() != first) return false;
    cur = cur.right();
    ++k;
  }
  return k >= 1 && indices.count(k) > 0;
}

}  // namespace

bool Relation::rep_contains(const Rep& rep, const Formula& first, const Formula& second) {
  switch (rep.kind) {
    case Kind::Finite: return rep.pairs.count(FormulaPair(first, second)) > 0;
    case Kind::Cofinite: return rep.pairs.count(FormulaPair(first, second)) == 0;
    case Kind::Full: return true;
    case Kind::Empty: return false;
    case Kind::Tower: return tower_member(rep.indices, first, second);
    case Kind::Override: {
      FormulaPair p(first, second);
      if (rep.pairs.count(p)) return true;
      if (rep.removed.count(p)) return false;
      return rep_contains(*rep.base, first, second);
    }
  }
  return false;
}

bool Relation::contains(const Formula& first, const Formula& second) const {
  return rep_contains(*rep_, first, second);
}

std::optional<Relation::FinCo> Relation::finco_form() const {
  switch (rep_->kind) {
    case Kind::Finite: return FinCo{false, rep_->pairs};
    case Kind::Cofinite: return FinCo{true, rep_->pairs};
    case Kind::Full: return FinCo{true, {}};
    case Kind::Empty: return FinCo{false, {}};
    case Kind::Tower: return std::nullopt;
    case Kind::Override: {
      auto b = Relation(rep_->base).finco_form();
      if (!b) return std::nullopt;
      if (!b->cofinite) {
        for (const auto& p : rep_->removed) b->pairs.erase(p);
        for (const auto& p : rep_->pairs) b->pairs.insert(p);
      } else {
        for (const auto& p : rep_->removed) b->pairs.insert(p);
        for (const auto& p : rep_->pairs) b->pairs.erase(p);
      }
      return b;
    }
  }
  return std::nullopt;
}

bool Relation::rep_equal(const Rep& a, const Rep& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Finite:
    case Kind::Cofinite: return a.pairs == b.pairs;
    case Kind::Full:
    case Kind::Empty: return true;
    case Kind::Tower: return a.indices == b.indices && a.variant == b.variant;
    case Kind::Override:
      return a.pairs == b.pairs && a.removed == b.removed && rep_equal(*a.base, *b.base);
  }
  return false;
}

bool Relation::structurally_equal(const Relation& other) const {
  return rep_equal(*rep_, *other.rep_);
}

std::optional<std::set<FormulaPair>> Relation::symmetric_difference(const Relation& a,
                                                                    const Relation& b) {
  auto fa = a.finco_form();
  auto fb = b.finco_form();
  if (fa && fb) {
    if (fa->cofinite != fb->cofinite) return std::nullopt;
    std::set<FormulaPair> out;
    std::set_symmetric_difference(fa->pairs.begin(), fa->pairs.end(), fb->pairs.begin(),
                                  fb->pairs.end(), std::inserter(out, out.begin()));
    return out;
  }
  // Non-reducing representations still compare when both are override chains
  // over the same core: membership can only differ on overridden pairs.
  std::set<FormulaPair> touched;
  const Rep* core_a = a.rep_.get();
  while (core_a->kind == Kind::Override) {
    for (const auto& p : core_a->pairs) touched.insert(p);
    for (const auto& p : core_a->removed) touched.insert(p);
    core_a = core_a->base.get();
  }
  const Rep* core_b = b.rep_.get();
  while (core_b->kind == Kind::Override) {
    for (const auto& p : core_b->pairs) touched.insert(p);
    for (const auto& p : core_b->removed) touched.insert(p);
    core_b = core_b->base.get();
  }
  if (!rep_equal(*core_a, *core_b)) return std::nullopt;
  std::set<FormulaPair> out;
  for (const auto& p : touched) {
    if (a.contains(p) != b.contains(p)) out.insert(p);
  }
  return out;
}

}  // namespace epstein
