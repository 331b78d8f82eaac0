#include "doctest.h"
#include "epstein/formula.hpp"
#include "epstein/parse.hpp"
#include "epstein/print.hpp"
#include "epstein/sample.hpp"

using namespace epstein;

namespace {

Formula p = Formula::letter(1);
Formula q = Formula::letter(2);
Formula r = Formula::letter(3);
Formula s = Formula::letter(4);

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution result;
  for (const auto& [v, f] : inner) result.emplace(v, substitute(outer, f));
  for (const auto& [v, f] : outer) result.emplace(v, f);
  return result;
}

}  // namespace

TEST_SUITE("syntax") {

TEST_CASE("parse handles the relatedness connectives") {
  CHECK(parse("p ~> p") == Formula::rel_imp(p, p));
  CHECK(parse("p ^ q") == Formula::rel_conj(p, q));
}

TEST_CASE("constant sugar expands over p0") {
  Formula p0 = Formula::letter(0);
  CHECK(parse("T") == Formula::disj(p0, Formula::neg(p0)));
  CHECK(parse("T") == Formula::top());
  CHECK(parse("F") == Formula::neg(Formula::disj(p0, Formula::neg(p0))));
  CHECK(parse("F") == Formula::bottom());
}

TEST_CASE("conjunction tier chains to the left") {
  CHECK(parse("!p & q ^ r") ==
        Formula::rel_conj(Formula::conj(Formula::neg(p), q), r));
  CHECK(parse("p & q & r") == Formula::conj(Formula::conj(p, q), r));
}

TEST_CASE("precedence tiers") {
  CHECK(parse("p & q | r") == Formula::disj(Formula::conj(p, q), r));
  CHECK(parse("p | q & r") == Formula::disj(p, Formula::conj(q, r)));
  CHECK(parse("p -> q -> p") == Formula::imp(p, Formula::imp(q, p)));
  CHECK(parse("p ~> q -> r") == Formula::rel_imp(p, Formula::imp(q, r)));
  CHECK(parse("p | q ~> r") == Formula::rel_imp(Formula::disj(p, q), r));
  CHECK(parse("p <-> q <-> r") == Formula::iff(Formula::iff(p, q), r));
  CHECK(parse("!p | !q") == Formula::disj(Formula::neg(p), Formula::neg(q)));
  CHECK(parse("!(p | q)") == Formula::neg(Formula::disj(p, q)));
}

TEST_CASE("letter spellings") {
  CHECK(parse("p0") == Formula::letter(0));
  CHECK(parse("p1") == p);
  CHECK(parse("p") == p);
  CHECK(parse("q") == Formula::letter(2));
  CHECK(parse("r") == Formula::letter(3));
  CHECK(parse("s") == Formula::letter(4));
  CHECK(parse("t") == Formula::letter(5));
  CHECK(parse("p42") == Formula::letter(42));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p &"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("p -< q"), ParseError);
  try {
    parse("p & & q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printer examples") {
  CHECK(print(Formula::rel_imp(p, p)) == "p ~> p");
  CHECK(print(Formula::neg(Formula::neg(Formula::top()))) == "!!(p0 | !p0)");
  CHECK(print(Formula::imp(p, Formula::imp(p, p))) == "p -> p -> p");
  CHECK(print(Formula::conj(Formula::conj(p, q), r)) == "p & q & r");
  CHECK(print(Formula::conj(p, Formula::conj(q, r))) == "p & (q & r)");
}

TEST_CASE("printer parenthesizes mixed implication chains") {
  CHECK(print(Formula::imp(p, Formula::rel_imp(q, r))) == "p -> (q ~> r)");
  CHECK(print(Formula::rel_imp(p, Formula::imp(q, r))) == "p ~> (q -> r)");
  CHECK(print(Formula::rel_imp(p, Formula::rel_imp(q, r))) == "p ~> q ~> r");
}

TEST_CASE("round trip on random formulas") {
  Sampler gen(2026);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(6, 5);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("round trip on deep towers") {
  CHECK(parse(print(imp_tower(p, 7))) == imp_tower(p, 7));
  CHECK(parse(print(lambda_tower(p, q, 5))) == lambda_tower(p, q, 5));
  CHECK(parse(print(neg_tower(6))) == neg_tower(6));
}

TEST_CASE("substitution examples") {
  Substitution to_p{{2, p}};
  CHECK(substitute(to_p, Formula::imp(p, Formula::rel_imp(q, p))) ==
        Formula::imp(p, Formula::rel_imp(p, p)));
  CHECK(substitute(Substitution{}, parse("(p ~> q) <-> !r")) == parse("(p ~> q) <-> !r"));
  Substitution widen{{1, Formula::conj(q, r)}};
  CHECK(substitute(widen, Formula::rel_imp(p, p)) ==
        Formula::rel_imp(Formula::conj(q, r), Formula::conj(q, r)));
}

TEST_CASE("substitution composes pointwise") {
  Sampler gen(7);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(4, 3);
    Substitution tau = gen.substitution({1, 2, 3}, 2);
    Substitution sigma = gen.substitution({1, 2, 3}, 2);
    CHECK(substitute(compose(sigma, tau), f) == substitute(sigma, substitute(tau, f)));
  }
}

TEST_CASE("schema matching") {
  Formula schema = parse("(p ~> q) -> (p -> q)");
  auto renaming = match_schema(schema, parse("(r ~> s) -> (r -> s)"));
  REQUIRE(renaming.has_value());
  CHECK(renaming->at(1) == r);
  CHECK(renaming->at(2) == s);
  CHECK(substitute(*renaming, schema) == parse("(r ~> s) -> (r -> s)"));

  CHECK(!match_schema(schema, parse("(r ~> s) -> (s -> r)")).has_value());

  auto collapse = match_schema(parse("p -> (q ~> p)"), parse("p -> (p ~> p)"));
  REQUIRE(collapse.has_value());
  CHECK(collapse->at(2) == p);
}

TEST_CASE("schema matching is sound and complete on random instances") {
  Sampler gen(11);
  for (int i = 0; i < 200; ++i) {
    Formula schema = gen.formula(3, 3);
    Substitution sigma = gen.substitution(vars(schema), 2);
    Formula target = substitute(sigma, schema);
    auto found = match_schema(schema, target);
    REQUIRE(found.has_value());
    CHECK(substitute(*found, schema) == target);
  }
}

TEST_CASE("vars") {
  CHECK(vars(parse("p ~> q")) == std::set<unsigned>{1, 2});
  CHECK(vars(Formula::top()) == std::set<unsigned>{0});
  CHECK(vars(parse("p -> p -> p")) == std::set<unsigned>{1});
}

TEST_CASE("subformula enumeration is post-order without duplicates") {
  CHECK(subformulas(Formula::rel_imp(p, q)) ==
        std::vector<Formula>{p, q, Formula::rel_imp(p, q)});
  CHECK(subformulas(Formula::neg(p)) == std::vector<Formula>{p, Formula::neg(p)});
  Formula f = Formula::rel_conj(p, Formula::disj(p, q));
  CHECK(subformulas(f) == std::vector<Formula>{p, q, Formula::disj(p, q), f});
  CHECK(proper_subformulas(f) == std::vector<Formula>{p, q, Formula::disj(p, q)});
}

TEST_CASE("implication towers") {
  CHECK(imp_tower(p, 0) == p);
  CHECK(imp_tower(p, 1) == Formula::imp(p, p));
  CHECK(imp_tower(p, 2) == Formula::imp(p, Formula::imp(p, p)));
  CHECK(imp_tower(q, 0) == q);
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(imp_tower(p, n).size() == 2 * n + 1);
  }
}

TEST_CASE("lambda towers") {
  CHECK(lambda_tower(p, q, 0) == Formula::rel_imp(q, p));
  CHECK(lambda_tower(p, q, 1) == Formula::imp(p, Formula::rel_imp(q, p)));
  CHECK(lambda_tower(p, q, 2) ==
        Formula::imp(p, Formula::imp(p, Formula::rel_imp(q, p))));
}

TEST_CASE("negation towers") {
  CHECK(neg_tower(0) == Formula::top());
  CHECK(neg_tower(1) == Formula::neg(Formula::top()));
  CHECK(neg_tower(1) == Formula::bottom());
  CHECK(neg_tower(2) == Formula::neg(Formula::neg(Formula::top())));
}

TEST_CASE("structural identity is not normalization") {
  CHECK(Formula::conj(p, q) != Formula::conj(q, p));
  CHECK(Formula::neg(Formula::neg(p)) != p);
  CHECK(FormulaPair(p, q) != FormulaPair(q, p));
}

TEST_CASE("ordering and hashing agree with equality") {
  Sampler gen(13);
  for (int i = 0; i < 200; ++i) {
    Formula a = gen.formula(3, 3);
    Formula b = gen.formula(3, 3);
    CHECK((a == b) == (Formula::compare(a, b) == 0));
    if (a == b) CHECK(a.hash() == b.hash());
    if (a < b) CHECK(!(b < a));
  }
}

}  // TEST_SUITE
