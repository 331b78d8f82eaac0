#include "doctest.h"
#include "epstein/parse.hpp"
#include "epstein/sample.hpp"
#include "epstein/sat.hpp"
#include "epstein/translate.hpp"

using namespace epstein;

namespace {

Formula p = Formula::letter(1);
Formula q = Formula::letter(2);
Formula r = Formula::letter(3);

CplFormula letter_atom(unsigned i) { return CplFormula::atom(Atom::letter(i)); }
CplFormula pair_atom(const Formula& f, const Formula& g) {
  return CplFormula::atom(Atom::pair(f, g));
}

// Exhaustive satisfiability over the formula's own atoms, as an oracle for
// the solver.
bool brute_force_sat(const CplFormula& f) {
  std::vector<Atom> as = atoms(f);
  REQUIRE(as.size() <= 12);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << as.size()); ++mask) {
    Assignment a(false);
    for (std::size_t i = 0; i < as.size(); ++i) {
      a.set(as[i], (mask >> i) & 1);
    }
    if (cpl_evaluate(a, f)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("translation") {

TEST_CASE("translation adds pair atoms over the original operands") {
  CHECK(translate(parse("p ~> q")) ==
        CplFormula::conj(CplFormula::imp(letter_atom(1), letter_atom(2)), pair_atom(p, q)));
  CHECK(translate(parse("p ^ q")) ==
        CplFormula::conj(CplFormula::conj(letter_atom(1), letter_atom(2)), pair_atom(p, q)));
  CHECK(translate(parse("p | q")) == CplFormula::disj(letter_atom(1), letter_atom(2)));

  Formula nested = parse("(p ~> q) ~> r");
  CplFormula inner = CplFormula::conj(CplFormula::imp(letter_atom(1), letter_atom(2)),
                                      pair_atom(p, q));
  CHECK(translate(nested) ==
        CplFormula::conj(CplFormula::imp(inner, letter_atom(3)),
                         pair_atom(parse("p ~> q"), r)));
}

TEST_CASE("assignments read letters from the valuation and pairs from the relation") {
  Valuation v(false);
  v.set(1, true);
  Model m{v, Relation::finite({{p, p}})};
  std::vector<Atom> as{Atom::letter(1), Atom::pair(p, p)};
  Assignment a = assignment_of(m, as);
  CHECK(a.value(Atom::letter(1)));
  CHECK(a.value(Atom::pair(p, p)));

  Model empty{Valuation(false), Relation::empty()};
  CHECK(!assignment_of(empty, {Atom::pair(Formula::top(), Formula::bottom())})
             .value(Atom::pair(Formula::top(), Formula::bottom())));
  Model full{Valuation(false), Relation::full()};
  CHECK(assignment_of(full, {Atom::pair(q, r)}).value(Atom::pair(q, r)));
}

TEST_CASE("classical evaluation") {
  Assignment a(false);
  a.set(Atom::letter(1), true);
  CHECK(cpl_evaluate(a, CplFormula::disj(letter_atom(1), letter_atom(2))));
  CHECK(cpl_evaluate(a, CplFormula::imp(letter_atom(1), letter_atom(1))));
  CHECK(cpl_evaluate(Assignment(false), CplFormula::imp(letter_atom(5), letter_atom(5))));
  Assignment b(true);
  b.set(Atom::pair(p, q), false);
  CHECK(!cpl_evaluate(b, CplFormula::conj(CplFormula::imp(letter_atom(1), letter_atom(2)),
                                          pair_atom(p, q))));
}

TEST_CASE("atom enumeration follows first occurrence") {
  CplFormula f = CplFormula::conj(pair_atom(p, q),
                                  CplFormula::disj(letter_atom(2), pair_atom(p, q)));
  CHECK(atoms(f) == std::vector<Atom>{Atom::pair(p, q), Atom::letter(2)});
}

TEST_CASE("solver examples") {
  CHECK(!sat(CplFormula::conj(letter_atom(1), CplFormula::neg(letter_atom(1)))).has_value());
  auto single = sat(pair_atom(p, q));
  REQUIRE(single.has_value());
  CHECK(single->value(Atom::pair(p, q)));
  CHECK(!sat(CplFormula::conj(
                 CplFormula::conj(CplFormula::imp(letter_atom(1), letter_atom(2)),
                                  letter_atom(1)),
                 CplFormula::neg(letter_atom(2))))
             .has_value());
}

TEST_CASE("solver agrees with brute force on random formulas") {
  Sampler gen(31);
  for (int i = 0; i < 400; ++i) {
    CplFormula f = translate(gen.formula(3, 3));
    auto found = sat(f);
    CHECK(found.has_value() == brute_force_sat(f));
    if (found) CHECK(cpl_evaluate(*found, f));
  }
}

TEST_CASE("solver output is deterministic") {
  Sampler gen(37);
  for (int i = 0; i < 100; ++i) {
    CplFormula f = translate(gen.formula(4, 3));
    auto first = sat(f);
    auto second = sat(f);
    CHECK(first.has_value() == second.has_value());
    if (first) {
      for (const Atom& at : atoms(f)) CHECK(first->value(at) == second->value(at));
    }
  }
}

TEST_CASE("theoremhood by unsatisfiability of the negated translation") {
  CHECK(f_valid(parse("(p ~> q) -> (p -> q)")));
  CHECK(f_valid(parse("(p ^ q) <-> ((p ~> q) & (p & q))")));
  CHECK(!f_valid(parse("p ~> p")));
  CHECK(f_valid(parse("p -> p")));
  CHECK(!f_valid(parse("p -> (p ~> p)")));
}

TEST_CASE("consequence by joint satisfiability") {
  CHECK(f_consequence({parse("p ^ q")}, parse("p ~> q")));
  CHECK(f_consequence({parse("p ~> q"), p}, q));
  CHECK(!f_consequence({parse("p -> q")}, parse("p ~> q")));
  CHECK(f_consequence({}, parse("p -> p")));
  CHECK(f_consequence({p, Formula::neg(p)}, q));
}

TEST_CASE("skeleton abstracts relatedness subformulas and letters") {
  CplFormula a0 = letter_atom(0);
  CplFormula a1 = CplFormula::atom(Atom::letter(1));
  CHECK(skeleton(parse("(p ~> q) | !(p ~> q)")) == CplFormula::disj(a0, CplFormula::neg(a0)));
  CHECK(skeleton(parse("p ~> p")) == a0);
  CHECK(skeleton(parse("(p ^ q) -> (p ^ q)")) == CplFormula::imp(a0, a0));
  CHECK(skeleton(parse("p -> q")) == CplFormula::imp(a0, a1));
  CHECK(is_tautology(skeleton(parse("(p ~> q) | !(p ~> q)"))));
  CHECK(!is_tautology(skeleton(parse("p ~> p"))));
}

TEST_CASE("evaluation commutes with translation") {
  Sampler gen(41);
  for (int i = 0; i < 500; ++i) {
    Model m = gen.model(2, 4);
    Formula f = gen.formula(5, 4);
    CHECK(invariant_on(m, f));
  }
}

TEST_CASE("valid formulas hold in every sampled model") {
  Sampler gen(43);
  std::vector<Formula> valid = {
      parse("(p ~> q) -> (p -> q)"),
      parse("(p ^ q) <-> ((p ~> q) & (p & q))"),
  };
  for (int i = 0; i < 40; ++i) {
    Substitution sigma = gen.substitution({1, 2}, 2);
    for (const Formula& f : valid) {
      Formula inst = substitute(sigma, f);
      REQUIRE(f_valid(inst));
      for (int j = 0; j < 25; ++j) {
        CHECK(evaluate(gen.model(2, 3), inst));
      }
    }
  }
}

TEST_CASE("invalid formulas yield verifying countermodels") {
  Sampler gen(47);
  int invalid_seen = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(4, 3);
    if (f_valid(f)) continue;
    ++invalid_seen;
    auto m = countermodel(f);
    REQUIRE(m.has_value());
    CHECK(!evaluate(*m, f));
  }
  CHECK(invalid_seen > 100);
  CHECK(!countermodel(parse("p -> p")).has_value());
}

TEST_CASE("tautologous skeletons are theorems") {
  Sampler gen(53);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.formula(3, 3);
    Formula excluded_middle = Formula::disj(f, Formula::neg(f));
    CHECK(is_tautology(skeleton(excluded_middle)));
    CHECK(f_valid(excluded_middle));
    if (is_tautology(skeleton(f))) CHECK(f_valid(f));
  }
}

}  // TEST_SUITE
