#include "epstein/parse.hpp"

#include <cctype>
#include <vector>

#include "epstein/cpl.hpp"

namespace epstein {

namespace {

enum class Tok {
  Letter,
  TrueK,
  FalseK,
  Not,
  And,
  RelConj,
  Or,
  Imp,
  RelImp,
  Iff,
  LParen,
  RParen,
  PairIntro,  // 'a' (classical language only)
  Comma,
  Less,
  Greater,
  End,
};

struct Token {
  Tok type;
  unsigned letter = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto push = [&](Tok t, std::size_t pos, unsigned letter = 0) {
    out.push_back(Token{t, letter, pos});
  };
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    switch (c) {
      case '!': push(Tok::Not, pos); ++i; continue;
      case '&': push(Tok::And, pos); ++i; continue;
      case '^': push(Tok::RelConj, pos); ++i; continue;
      case '|': push(Tok::Or, pos); ++i; continue;
      case '(': push(Tok::LParen, pos); ++i; continue;
      case ')': push(Tok::RParen, pos); ++i; continue;
      case ',': push(Tok::Comma, pos); ++i; continue;
      case '>': push(Tok::Greater, pos); ++i; continue;
      case 'T': push(Tok::TrueK, pos); ++i; continue;
      case 'F': push(Tok::FalseK, pos); ++i; continue;
      case 'a': push(Tok::PairIntro, pos); ++i; continue;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          push(Tok::Imp, pos);
          i += 2;
          continue;
        }
        throw ParseError("expected '->'", pos);
      case '~':
        if (i + 1 < n && text[i + 1] == '>') {
          push(Tok::RelImp, pos);
          i += 2;
          continue;
        }
        throw ParseError("expected '~>'", pos);
      case '<':
        if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>') {
          push(Tok::Iff, pos);
          i += 3;
          continue;
        }
        push(Tok::Less, pos);
        ++i;
        continue;
      default: break;
    }
    if (c == 'p') {
      ++i;
      if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        unsigned long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<unsigned long>(text[i] - '0');
          if (v > 1000000) throw ParseError("letter index too large", pos);
          ++i;
        }
        push(Tok::Letter, pos, static_cast<unsigned>(v));
      } else {
        push(Tok::Letter, pos, 1);
      }
      continue;
    }
    if (c >= 'q' && c <= 't') {
      push(Tok::Letter, pos, static_cast<unsigned>(c - 'q') + 2);
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
  out.push_back(Token{Tok::End, 0, n});
  return out;
}

// Recursive descent over the token stream. The classical entry points share
// the object-language tokenizer; they reject the relatedness connectives and
// add pair atoms a<f1,f2> whose components are object-language formulas.
class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Formula object_formula() {
    Formula f = obj_iff();
    expect_end();
    return f;
  }

  CplFormula classical_formula() {
    CplFormula f = cpl_iff();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  void expect(Tok t, const char* what) {
    if (peek().type != t) throw ParseError(std::string("expected ") + what, peek().pos);
    ++i_;
  }
  void expect_end() {
    if (peek().type != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
  }

  Formula obj_iff() {
    Formula l = obj_imp();
    while (peek().type == Tok::Iff) {
      ++i_;
      l = Formula::iff(l, obj_imp());
    }
    return l;
  }

  Formula obj_imp() {
    Formula l = obj_disj();
    Tok t = peek().type;
    if (t == Tok::Imp || t == Tok::RelImp) {
      ++i_;
      Formula r = obj_imp();
      return Formula::bin(t == Tok::Imp ? Conn::Imp : Conn::RelImp, l, r);
    }
    return l;
  }

  Formula obj_disj() {
    Formula l = obj_conj();
    while (peek().type == Tok::Or) {
      ++i_;
      l = Formula::disj(l, obj_conj());
    }
    return l;
  }

  Formula obj_conj() {
    Formula l = obj_neg();
    while (peek().type == Tok::And || peek().type == Tok::RelConj) {
      Conn c = take().type == Tok::And ? Conn::And : Conn::RelConj;
      l = Formula::bin(c, l, obj_neg());
    }
    return l;
  }

  Formula obj_neg() {
    switch (peek().type) {
      case Tok::Not:
        ++i_;
        return Formula::neg(obj_neg());
      case Tok::LParen: {
        ++i_;
        Formula f = obj_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Letter:
        return Formula::letter(take().letter);
      case Tok::TrueK:
        ++i_;
        return Formula::top();
      case Tok::FalseK:
        ++i_;
        return Formula::bottom();
      default:
        throw ParseError("expected formula", peek().pos);
    }
  }

  CplFormula cpl_iff() {
    CplFormula l = cpl_imp();
    while (peek().type == Tok::Iff) {
      ++i_;
      l = CplFormula::iff(l, cpl_imp());
    }
    return l;
  }

  CplFormula cpl_imp() {
    CplFormula l = cpl_disj();
    if (peek().type == Tok::Imp) {
      ++i_;
      return CplFormula::imp(l, cpl_imp());
    }
    return l;
  }

  CplFormula cpl_disj() {
    CplFormula l = cpl_conj();
    while (peek().type == Tok::Or) {
      ++i_;
      l = CplFormula::disj(l, cpl_conj());
    }
    return l;
  }

  CplFormula cpl_conj() {
    CplFormula l = cpl_neg();
    while (peek().type == Tok::And) {
      ++i_;
      l = CplFormula::conj(l, cpl_neg());
    }
    return l;
  }

  CplFormula cpl_neg() {
    switch (peek().type) {
      case Tok::Not:
        ++i_;
        return CplFormula::neg(cpl_neg());
      case Tok::LParen: {
        ++i_;
        CplFormula f = cpl_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Letter:
        return CplFormula::atom(Atom::letter(take().letter));
      case Tok::TrueK: {
        ++i_;
        CplFormula p0 = CplFormula::atom(Atom::letter(0));
        return CplFormula::disj(p0, CplFormula::neg(p0));
      }
      case Tok::FalseK: {
        ++i_;
        CplFormula p0 = CplFormula::atom(Atom::letter(0));
        return CplFormula::neg(CplFormula::disj(p0, CplFormula::neg(p0)));
      }
      case Tok::PairIntro: {
        ++i_;
        expect(Tok::Less, "'<'");
        Formula first = obj_iff();
        expect(Tok::Comma, "','");
        Formula second = obj_iff();
        expect(Tok::Greater, "'>'");
        return CplFormula::atom(Atom::pair(std::move(first), std::move(second)));
      }
      default:
        throw ParseError("expected formula", peek().pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  return Parser(text).object_formula();
}

CplFormula parse_cpl(const std::string& text) {
  return Parser(text).classical_formula();
}

}  // namespace epstein
