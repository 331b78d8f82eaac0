#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epstein {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a configured resource bound (e.g. too many letters for a
// truth-table sweep).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A precondition of a library operation does not hold for the given input.
class DomainError : public Error {
 public:
  using Error::Error;
};

enum class Conn : std::uint8_t { And, Or, Imp, Iff, RelImp, RelConj };

bool is_classical(Conn c);

// Immutable formula over letters p0, p1, ... with negation and the six
// binary connectives. Values are cheap shared handles; structural equality,
// hashing and a total (size, structure) order make formulas usable as set
// and map keys directly.
class Formula {
 public:
  enum class Kind : std::uint8_t { Letter, Neg, Bin };

  static Formula letter(unsigned index);
  static Formula neg(Formula f);
  static Formula bin(Conn c, Formula lhs, Formula rhs);

  static Formula conj(Formula l, Formula r) { return bin(Conn::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return bin(Conn::Or, std::move(l), std::move(r)); }
  static Formula imp(Formula l, Formula r) { return bin(Conn::Imp, std::move(l), std::move(r)); }
  static Formula iff(Formula l, Formula r) { return bin(Conn::Iff, std::move(l), std::move(r)); }
  static Formula rel_imp(Formula l, Formula r) { return bin(Conn::RelImp, std::move(l), std::move(r)); }
  static Formula rel_conj(Formula l, Formula r) { return bin(Conn::RelConj, std::move(l), std::move(r)); }

  // p0 | !p0 and its negation; the T/F surface syntax expands to these.
  static Formula top();
  static Formula bottom();

  Kind kind() const { return node_->kind; }
  bool is_letter() const { return node_->kind == Kind::Letter; }
  bool is_neg() const { return node_->kind == Kind::Neg; }
  bool is_bin() const { return node_->kind == Kind::Bin; }
  bool is_bin(Conn c) const { return is_bin() && node_->conn == c; }

  unsigned letter_index() const;
  Formula child() const;
  Conn conn() const;
  Formula left() const;
  Formula right() const;

  std::size_t hash() const { return node_->hash; }
  std::uint32_t size() const { return node_->size; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  // Total order: size first, then structure. Sorted containers of formulas
  // therefore enumerate small formulas before large ones.
  static int compare(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    Conn conn;
    unsigned letter;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash;
    std::uint32_t size;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using FormulaPair = std::pair<Formula, Formula>;

struct FormulaPairHash {
  std::size_t operator()(const FormulaPair& p) const;
};

using Substitution = std::map<unsigned, Formula>;

// Homomorphic replacement of letters by formulas.
Formula substitute(const Substitution& s, const Formula& f);

// One-sided matching: a substitution s with substitute(s, schema) == target,
// if any. Every letter of the schema is a variable.
std::optional<Substitution> match_schema(const Formula& schema, const Formula& target);

std::set<unsigned> vars(const Formula& f);

// All distinct subformulas in dependency order (children first, f last),
// and the same list without f itself.
std::vector<Formula> subformulas(const Formula& f);
std::vector<Formula> proper_subformulas(const Formula& f);

// base^0 = base, base^{n+1} = base -> base^n
Formula imp_tower(const Formula& base, unsigned n);
// p^0 = q ~> p, p^{n+1} = p -> p^n
Formula lambda_tower(const Formula& p, const Formula& q, unsigned n);
// n-fold negation of the expanded top constant
Formula neg_tower(unsigned n);

}  // namespace epstein

template <>
struct std::hash<epstein::Formula> {
  std::size_t operator()(const epstein::Formula& f) const { return f.hash(); }
};
