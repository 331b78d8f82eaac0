#pragma once

#include <memory>
#include <optional>
#include <set>

#include "epstein/formula.hpp"

namespace epstein {

// Binary relatedness relation over formulas. All representations have
// decidable membership:
//   Finite    exactly the listed pairs
//   Cofinite  everything except the listed pairs
//   Full / Empty
//   Tower     pairs <f, f -> (f -> ... f)> whose implication depth lies in
//             a fixed index set; the SupersetClosure variant tags the least
//             member of the upward-closed family generated by that set
//   Override  a base relation with finitely many pairs forced in or out
class Relation {
 public:
  enum class Kind { Finite, Cofinite, Full, Empty, Tower, Override };
  enum class TowerVariant { R0T, SupersetClosure };

  static Relation finite(std::set<FormulaPair> pairs);
  static Relation cofinite(std::set<FormulaPair> excluded);
  static Relation full();
  static Relation empty();
  static Relation tower(std::set<unsigned> indices, TowerVariant variant);
  static Relation override_with(Relation base, std::set<FormulaPair> add,
                                std::set<FormulaPair> remove);

  Kind kind() const { return rep_->kind; }
  const std::set<FormulaPair>& pairs() const;     // Finite / Cofinite
  const std::set<unsigned>& indices() const;      // Tower
  TowerVariant variant() const;                   // Tower
  Relation base() const;                          // Override
  const std::set<FormulaPair>& added() const;     // Override
  const std::set<FormulaPair>& removed() const;   // Override

  bool contains(const Formula& first, const Formula& second) const;
  bool contains(const FormulaPair& p) const { return contains(p.first, p.second); }

  // Finite or cofinite pair-set view, when the representation reduces to
  // one (Tower does not; Override reduces when its base does).
  struct FinCo {
    bool cofinite;
    std::set<FormulaPair> pairs;
  };
  std::optional<FinCo> finco_form() const;

  // Pairs on which the two relations disagree, when that set is provably
  // finite: both sides reduce to finco form, or both are override chains
  // over structurally identical bases.
  static std::optional<std::set<FormulaPair>> symmetric_difference(const Relation& a,
                                                                   const Relation& b);

  bool structurally_equal(const Relation& other) const;

 private:
  struct Rep {
    Kind kind;
    std::set<FormulaPair> pairs;       // Finite/Cofinite; Override: add
    std::set<FormulaPair> removed;     // Override
    std::set<unsigned> indices;        // Tower
    TowerVariant variant = TowerVariant::R0T;
    std::shared_ptr<const Rep> base;   // Override
  };
  explicit Relation(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static bool rep_contains(const Rep& rep, const Formula& first, const Formula& second);
  static bool rep_equal(const Rep& a, const Rep& b);

  std::shared_ptr<const Rep> rep_;
};

}  // namespace epstein
