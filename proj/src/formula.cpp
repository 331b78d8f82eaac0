#include "epstein/formula.hpp"

#include <functional>

namespace epstein {

bool is_classical(Conn c) {
  return c != Conn::RelImp && c != Conn::RelConj;
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::letter(unsigned index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Letter;
  n->conn = Conn::And;
  n->letter = index;
  n->hash = mix(0x1e7, index);
  n->size = 1;
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->conn = Conn::And;
  n->letter = 0;
  n->hash = mix(0x9e6, f.hash());
  n->size = f.size() + 1;
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::bin(Conn c, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bin;
  n->conn = c;
  n->letter = 0;
  n->hash = mix(mix(static_cast<std::size_t>(c) + 0xb17, lhs.hash()), rhs.hash());
  n->size = lhs.size() + rhs.size() + 1;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = disj(letter(0), neg(letter(0)));
  return t;
}

Formula Formula::bottom() {
  static const Formula b = neg(top());
  return b;
}

unsigned Formula::letter_index() const {
  if (!is_letter()) throw Error("letter_index on non-letter");
  return node_->letter;
}

Formula Formula::child() const {
  if (!is_neg()) throw Error("child on non-negation");
  return Formula(node_->lhs);
}

Conn Formula::conn() const {
  if (!is_bin()) throw Error("conn on non-binary formula");
  return node_->conn;
}

Formula Formula::left() const {
  if (!is_bin()) throw Error("left on non-binary formula");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (!is_bin()) throw Error("right on non-binary formula");
  return Formula(node_->rhs);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return Formula::compare(a, b) == 0;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Letter:
      if (a.node_->letter != b.node_->letter) return a.node_->letter < b.node_->letter ? -1 : 1;
      return 0;
    case Kind::Neg:
      return compare(Formula(a.node_->lhs), Formula(b.node_->lhs));
    case Kind::Bin: {
      if (a.node_->conn != b.node_->conn) return a.node_->conn < b.node_->conn ? -1 : 1;
      int c = compare(Formula(a.node_->lhs), Formula(b.node_->lhs));
      if (c != 0) return c;
      return compare(Formula(a.node_->rhs), Formula(b.node_->rhs));
    }
  }
  return 0;
}

std::size_t FormulaPairHash::operator()(const FormulaPair& p) const {
  return mix(p.first.hash(), p.second.hash());
}

Formula substitute(const Substitution& s, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter: {
      auto it = s.find(f.letter_index());
      return it == s.end() ? f : it->second;
    }
    case Formula::Kind::Neg:
      return Formula::neg(substitute(s, f.child()));
    case Formula::Kind::Bin:
      return Formula::bin(f.conn(), substitute(s, f.left()), substitute(s, f.right()));
  }
  throw Error("unreachable");
}

namespace {

bool match_into(const Formula& schema, const Formula& target, Substitution& out) {
  switch (schema.kind()) {
    case Formula::Kind::Letter: {
      auto [it, inserted] = out.emplace(schema.letter_index(), target);
      return inserted || it->second == target;
    }
    case Formula::Kind::Neg:
      return target.is_neg() && match_into(schema.child(), target.child(), out);
    case Formula::Kind::Bin:
      return target.is_bin(schema.conn()) && match_into(schema.left(), target.left(), out) &&
             match_into(schema.right(), target.right(), out);
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_schema(const Formula& schema, const Formula& target) {
  Substitution s;
  if (!match_into(schema, target, s)) return std::nullopt;
  return s;
}

std::set<unsigned> vars(const Formula& f) {
  std::set<unsigned> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::Letter: out.insert(g.letter_index()); break;
      case Formula::Kind::Neg: walk(g.child()); break;
      case Formula::Kind::Bin:
        walk(g.left());
        walk(g.right());
        break;
    }
  };
  walk(f);
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::set<Formula> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    switch (g.kind()) {
      case Formula::Kind::Letter: break;
      case Formula::Kind::Neg: walk(g.child()); break;
      case Formula::Kind::Bin:
        walk(g.left());
        walk(g.right());
        break;
    }
    if (seen.insert(g).second) out.push_back(g);
  };
  walk(f);
  return out;
}

std::vector<Formula> proper_subformulas(const Formula& f) {
  auto out = subformulas(f);
  out.pop_back();
  return out;
}

Formula imp_tower(const Formula& base, unsigned n) {
  Formula t = base;
  for (unsigned i = 0; i < n; ++i) t = Formula::imp(base, t);
  return t;
}

Formula lambda_tower(const Formula& p, const Formula& q, unsigned n) {
  Formula t = Formula::rel_imp(q, p);
  for (unsigned i = 0; i < n; ++i) t = Formula::imp(p, t);
  return t;
}

Formula neg_tower(unsigned n) {
  Formula t = Formula::top();
  for (unsigned i = 0; i < n; ++i) t = Formula::neg(t);
  return t;
}

}  // namespace epstein
