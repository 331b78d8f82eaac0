#include "epstein/cpl.hpp"

#include <functional>

#include "epstein/print.hpp"

namespace epstein {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t Atom::hash() const {
  if (is_letter()) return mix(0xa70, index());
  return mix(0xa71, FormulaPairHash{}(formula_pair()));
}

bool operator==(const Atom& a, const Atom& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_letter()) return a.index() == b.index();
  return a.formula_pair() == b.formula_pair();
}

bool operator<(const Atom& a, const Atom& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
  if (a.is_letter()) return a.index() < b.index();
  return a.formula_pair() < b.formula_pair();
}

CplFormula CplFormula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->conn = Conn::And;
  n->atom = std::make_shared<Atom>(std::move(a));
  n->hash = mix(0xcafe, n->atom->hash());
  n->size = 1;
  return CplFormula(std::move(n));
}

CplFormula CplFormula::neg(CplFormula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->conn = Conn::And;
  n->hash = mix(0xc9e6, f.hash());
  n->size = f.size() + 1;
  n->lhs = std::move(f.node_);
  return CplFormula(std::move(n));
}

CplFormula CplFormula::bin(Conn c, CplFormula lhs, CplFormula rhs) {
  if (!is_classical(c)) throw Error("relatedness connective in classical formula");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bin;
  n->conn = c;
  n->hash = mix(mix(static_cast<std::size_t>(c) + 0xcb1, lhs.hash()), rhs.hash());
  n->size = lhs.size() + rhs.size() + 1;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return CplFormula(std::move(n));
}

const Atom& CplFormula::atom_value() const {
  if (!is_atom()) throw Error("atom_value on non-atom");
  return *node_->atom;
}

CplFormula CplFormula::child() const {
  if (!is_neg()) throw Error("child on non-negation");
  return CplFormula(node_->lhs);
}

Conn CplFormula::conn() const {
  if (!is_bin()) throw Error("conn on non-binary formula");
  return node_->conn;
}

CplFormula CplFormula::left() const {
  if (!is_bin()) throw Error("left on non-binary formula");
  return CplFormula(node_->lhs);
}

CplFormula CplFormula::right() const {
  if (!is_bin()) throw Error("right on non-binary formula");
  return CplFormula(node_->rhs);
}

bool operator==(const CplFormula& a, const CplFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return CplFormula::compare(a, b) == 0;
}

int CplFormula::compare(const CplFormula& a, const CplFormula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Atom: {
      const Atom& x = a.atom_value();
      const Atom& y = b.atom_value();
      if (x < y) return -1;
      if (y < x) return 1;
      return 0;
    }
    case Kind::Neg:
      return compare(a.child(), b.child());
    case Kind::Bin: {
      if (a.node_->conn != b.node_->conn) return a.node_->conn < b.node_->conn ? -1 : 1;
      int c = compare(a.left(), b.left());
      if (c != 0) return c;
      return compare(a.right(), b.right());
    }
  }
  return 0;
}

bool cpl_evaluate(const Assignment& a, const CplFormula& f) {
  switch (f.kind()) {
    case CplFormula::Kind::Atom:
      return a.value(f.atom_value());
    case CplFormula::Kind::Neg:
      return !cpl_evaluate(a, f.child());
    case CplFormula::Kind::Bin: {
      bool l = cpl_evaluate(a, f.left());
      bool r = cpl_evaluate(a, f.right());
      switch (f.conn()) {
        case Conn::And: return l && r;
        case Conn::Or: return l || r;
        case Conn::Imp: return !l || r;
        case Conn::Iff: return l == r;
        default: break;
      }
    }
  }
  throw Error("unreachable");
}

std::vector<Atom> atoms(const CplFormula& f) {
  std::vector<Atom> out;
  std::set<Atom> seen;
  std::function<void(const CplFormula&)> walk = [&](const CplFormula& g) {
    switch (g.kind()) {
      case CplFormula::Kind::Atom:
        if (seen.insert(g.atom_value()).second) out.push_back(g.atom_value());
        break;
      case CplFormula::Kind::Neg:
        walk(g.child());
        break;
      case CplFormula::Kind::Bin:
        walk(g.left());
        walk(g.right());
        break;
    }
  };
  walk(f);
  return out;
}

std::string print_atom(const Atom& a) {
  if (a.is_letter()) return letter_name(a.index());
  return "a<" + print(a.formula_pair().first) + "," + print(a.formula_pair().second) + ">";
}

namespace {

int cpl_level(const CplFormula& f) {
  switch (f.kind()) {
    case CplFormula::Kind::Atom: return 5;
    case CplFormula::Kind::Neg: return 4;
    case CplFormula::Kind::Bin:
      switch (f.conn()) {
        case Conn::Iff: return 0;
        case Conn::Imp: return 1;
        case Conn::Or: return 2;
        default: return 3;
      }
  }
  return 5;
}

std::string cpl_render(const CplFormula& f, int min_level) {
  std::string s;
  switch (f.kind()) {
    case CplFormula::Kind::Atom:
      s = print_atom(f.atom_value());
      break;
    case CplFormula::Kind::Neg:
      s = "!" + cpl_render(f.child(), 4);
      break;
    case CplFormula::Kind::Bin:
      switch (f.conn()) {
        case Conn::Iff:
          s = cpl_render(f.left(), 0) + " <-> " + cpl_render(f.right(), 1);
          break;
        case Conn::Imp:
          s = cpl_render(f.left(), 2) + " -> " + cpl_render(f.right(), 1);
          break;
        case Conn::Or:
          s = cpl_render(f.left(), 2) + " | " + cpl_render(f.right(), 3);
          break;
        default:
          s = cpl_render(f.left(), 3) + " & " + cpl_render(f.right(), 4);
          break;
      }
      break;
  }
  if (cpl_level(f) < min_level) return "(" + s + ")";
  return s;
}

}  // namespace

std::string print_cpl(const CplFormula& f) {
  return cpl_render(f, 0);
}

}  // namespace epstein
