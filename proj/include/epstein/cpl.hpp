#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "epstein/formula.hpp"

namespace epstein {

// Atom of the classical target language: either an object-language letter or
// a relatedness marker indexed by an ordered pair of object-language formulas.
class Atom {
 public:
  static Atom letter(unsigned index) { return Atom(index); }
  static Atom pair(Formula first, Formula second) {
    return Atom(FormulaPair(std::move(first), std::move(second)));
  }
  static Atom pair(FormulaPair p) { return Atom(std::move(p)); }

  bool is_letter() const { return v_.index() == 0; }
  bool is_pair() const { return v_.index() == 1; }
  unsigned index() const { return std::get<0>(v_); }
  const FormulaPair& formula_pair() const { return std::get<1>(v_); }

  std::size_t hash() const;
  friend bool operator==(const Atom& a, const Atom& b);
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
  friend bool operator<(const Atom& a, const Atom& b);

 private:
  explicit Atom(unsigned i) : v_(i) {}
  explicit Atom(FormulaPair p) : v_(std::move(p)) {}
  std::variant<unsigned, FormulaPair> v_;
};

// Classical propositional formula over Atoms: negation plus the four
// classical binary connectives only.
class CplFormula {
 public:
  enum class Kind : std::uint8_t { Atom, Neg, Bin };

  static CplFormula atom(Atom a);
  static CplFormula neg(CplFormula f);
  static CplFormula bin(Conn c, CplFormula lhs, CplFormula rhs);

  static CplFormula conj(CplFormula l, CplFormula r) { return bin(Conn::And, std::move(l), std::move(r)); }
  static CplFormula disj(CplFormula l, CplFormula r) { return bin(Conn::Or, std::move(l), std::move(r)); }
  static CplFormula imp(CplFormula l, CplFormula r) { return bin(Conn::Imp, std::move(l), std::move(r)); }
  static CplFormula iff(CplFormula l, CplFormula r) { return bin(Conn::Iff, std::move(l), std::move(r)); }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == Kind::Atom; }
  bool is_neg() const { return node_->kind == Kind::Neg; }
  bool is_bin() const { return node_->kind == Kind::Bin; }

  const Atom& atom_value() const;
  CplFormula child() const;
  Conn conn() const;
  CplFormula left() const;
  CplFormula right() const;

  std::size_t hash() const { return node_->hash; }
  std::uint32_t size() const { return node_->size; }

  friend bool operator==(const CplFormula& a, const CplFormula& b);
  friend bool operator!=(const CplFormula& a, const CplFormula& b) { return !(a == b); }
  static int compare(const CplFormula& a, const CplFormula& b);
  friend bool operator<(const CplFormula& a, const CplFormula& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    Conn conn;
    std::shared_ptr<const Atom> atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash;
    std::uint32_t size;
  };
  explicit CplFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Total boolean assignment: finitely many exceptions over a default value.
// Exceptions equal to the default are normalized away, so equal functions
// compare equal.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(bool default_value) : default_(default_value) {}

  bool value(const Atom& a) const {
    auto it = except_.find(a);
    return it == except_.end() ? default_ : it->second;
  }
  void set(const Atom& a, bool v) {
    if (v == default_) {
      except_.erase(a);
    } else {
      except_[a] = v;
    }
  }
  bool default_value() const { return default_; }
  const std::map<Atom, bool>& exceptions() const { return except_; }
  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.default_ == b.default_ && a.except_ == b.except_;
  }

 private:
  bool default_ = false;
  std::map<Atom, bool> except_;
};

bool cpl_evaluate(const Assignment& a, const CplFormula& f);

// Distinct atoms in first-occurrence order (depth-first, left to right).
std::vector<Atom> atoms(const CplFormula& f);

std::string print_atom(const Atom& a);
std::string print_cpl(const CplFormula& f);

// Classical-language parser; accepts the object grammar minus the
// relatedness connectives, plus pair atoms written a<f1,f2>.
CplFormula parse_cpl(const std::string& text);

}  // namespace epstein

template <>
struct std::hash<epstein::Atom> {
  std::size_t operator()(const epstein::Atom& a) const { return a.hash(); }
};
