#include "epstein/print.hpp"

namespace epstein {

std::string letter_name(unsigned index) {
  static const char* short_names[] = {"p0", "p", "q", "r", "s", "t"};
  if (index <= 5) return short_names[index];
  return "p" + std::to_string(index);
}

namespace {

// Binding tiers, loosest to tightest: <-> (0), -> ~> (1), | (2), & ^ (3),
// ! (4), atoms (5).
int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter: return 5;
    case Formula::Kind::Neg: return 4;
    case Formula::Kind::Bin:
      switch (f.conn()) {
        case Conn::Iff: return 0;
        case Conn::Imp:
        case Conn::RelImp: return 1;
        case Conn::Or: return 2;
        case Conn::And:
        case Conn::RelConj: return 3;
      }
  }
  return 5;
}

const char* op_text(Conn c) {
  switch (c) {
    case Conn::And: return " & ";
    case Conn::Or: return " | ";
    case Conn::Imp: return " -> ";
    case Conn::Iff: return " <-> ";
    case Conn::RelImp: return " ~> ";
    case Conn::RelConj: return " ^ ";
  }
  return "";
}

bool imp_tier(Conn c) { return c == Conn::Imp || c == Conn::RelImp; }

std::string render(const Formula& f, int min_level) {
  std::string s;
  switch (f.kind()) {
    case Formula::Kind::Letter:
      s = letter_name(f.letter_index());
      break;
    case Formula::Kind::Neg:
      s = "!" + render(f.child(), 4);
      break;
    case Formula::Kind::Bin: {
      Conn c = f.conn();
      switch (c) {
        case Conn::Iff:
          s = render(f.left(), 0) + op_text(c) + render(f.right(), 1);
          break;
        case Conn::Imp:
        case Conn::RelImp: {
          // Right-associative; a right operand from the same tier only skips
          // parentheses when its connective matches, so mixed chains like
          // p -> (q ~> r) stay visually explicit.
          Formula r = f.right();
          int rmin = (r.is_bin() && imp_tier(r.conn()) && r.conn() != c) ? 2 : 1;
          s = render(f.left(), 2) + op_text(c) + render(r, rmin);
          break;
        }
        case Conn::Or:
          s = render(f.left(), 2) + op_text(c) + render(f.right(), 3);
          break;
        case Conn::And:
        case Conn::RelConj:
          s = render(f.left(), 3) + op_text(c) + render(f.right(), 4);
          break;
      }
      break;
    }
  }
  if (level(f) < min_level) return "(" + s + ")";
  return s;
}

}  // namespace

std::string print(const Formula& f) {
  return render(f, 0);
}

std::string print(const FormulaPair& p) {
  return "<" + print(p.first) + ", " + print(p.second) + ">";
}

}  // namespace epstein
