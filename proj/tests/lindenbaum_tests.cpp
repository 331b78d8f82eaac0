#include <algorithm>
#include <vector>

#include "doctest.h"
#include "epstein/conditions.hpp"
#include "epstein/lindenbaum.hpp"
#include "epstein/parse.hpp"
#include "epstein/print.hpp"
#include "epstein/sample.hpp"
#include "epstein/sat.hpp"
#include "epstein/translate.hpp"

using namespace epstein;

namespace {

bool is_member(const BoundedMcs& mcs, const char* text) {
  return mcs.members.count(parse(text)) > 0;
}

}  // namespace

TEST_SUITE("lindenbaum") {

TEST_CASE("subformula closure collects and orders") {
  std::vector<Formula> closure = subformula_closure({parse("(p ~> q) & !p")});
  std::vector<Formula> expected = {parse("p"),        parse("q"),
                                   parse("!p"),       parse("p ~> q"),
                                   parse("(p ~> q) & !p")};
  CHECK(closure == expected);
  for (std::size_t i = 1; i < closure.size(); ++i) {
    CHECK(closure[i - 1].size() <= closure[i].size());
  }
}

TEST_CASE("negation extension adds one negation layer") {
  std::vector<Formula> universe = negation_extension(subformula_closure({parse("p & q")}));
  std::set<Formula> as_set(universe.begin(), universe.end());
  CHECK(as_set.count(parse("!p")));
  CHECK(as_set.count(parse("!(p & q)")));
  CHECK(as_set.count(parse("p & q")));
  CHECK(universe.size() == 6);
}

TEST_CASE("rejects an unclosed universe and stray premises") {
  CHECK_THROWS_AS(
      bounded_lindenbaum(ProofSystem::f(), {}, {parse("p & q")}),
      DomainError);
  CHECK_THROWS_AS(
      bounded_lindenbaum(ProofSystem::f(), {parse("r")},
                         subformula_closure({parse("p & q")})),
      DomainError);
}

TEST_CASE("extends a single relatedness premise") {
  std::vector<Formula> universe = subformula_closure({parse("p ~> q")});
  auto mcs = bounded_lindenbaum(ProofSystem::f(), {parse("p ~> q")}, universe);
  REQUIRE(mcs);
  CHECK(mcs->universe == universe);
  CHECK(is_member(*mcs, "p ~> q"));
  CHECK(is_member(*mcs, "p"));
  CHECK(is_member(*mcs, "q"));
  CHECK(mcs->members.size() == 3);
}

TEST_CASE("inconsistent premises yield nothing") {
  std::vector<Formula> universe = subformula_closure({parse("p"), parse("!p")});
  CHECK_FALSE(bounded_lindenbaum(ProofSystem::f(),
                                 {parse("p"), parse("!p")}, universe));

  std::vector<Formula> rel = subformula_closure(
      {parse("p ^ q"), parse("!(p & q)")});
  CHECK_FALSE(bounded_lindenbaum(
      ProofSystem::f(), {parse("p ^ q"), parse("!(p & q)")}, rel));
}

TEST_CASE("symmetry instances force the swapped arrow") {
  std::vector<Formula> universe =
      subformula_closure({parse("p ~> q"), parse("q ~> p"), parse("q -> p")});
  std::vector<Formula> sigma = {parse("p ~> q"), parse("q -> p")};

  auto with_s = bounded_lindenbaum(ProofSystem::fs(), sigma, universe);
  REQUIRE(with_s);
  CHECK(is_member(*with_s, "q ~> p"));

  // Without the symmetry schema nothing forces it, and the greedy pass
  // reaches q ~> p only after accepting everything smaller; it is still
  // taken because nothing contradicts it either.
  auto plain = bounded_lindenbaum(ProofSystem::f(), sigma, universe);
  REQUIRE(plain);
  CHECK(is_member(*plain, "q ~> p"));
}

TEST_CASE("members settle every decidable universe formula") {
  Sampler sampler(7);
  int produced = 0;
  for (int round = 0; round < 40 && produced < 15; ++round) {
    std::vector<Formula> seeds;
    int seed_count = 2 + static_cast<int>(sampler.next(2));
    for (int i = 0; i < seed_count; ++i) {
      seeds.push_back(sampler.formula(3, 3));
    }
    std::vector<Formula> universe = subformula_closure(seeds);
    if (universe.size() > 40) continue;
    std::vector<Formula> sigma = {seeds[0]};
    auto mcs = bounded_lindenbaum(ProofSystem::f(), sigma, universe);
    if (!mcs) continue;
    ++produced;

    CHECK(mcs->members.count(seeds[0]));
    // Maximality: adding any rejected formula breaks consistency, which
    // shows up as its translation contradicting the members'.
    std::vector<CplFormula> kept;
    for (const Formula& f : mcs->members) kept.push_back(translate(f));
    for (const Formula& f : universe) {
      if (mcs->members.count(f)) continue;
      std::vector<CplFormula> extended = kept;
      extended.push_back(translate(f));
      CHECK_FALSE(sat_conj(extended));
    }
  }
  CHECK(produced >= 15);
}

TEST_CASE("canonical model matches the worked example") {
  std::vector<Formula> universe = subformula_closure({parse("p ~> q")});
  auto mcs = bounded_lindenbaum(ProofSystem::f(), {parse("p ~> q")}, universe);
  REQUIRE(mcs);

  Model plain = canonical_model(*mcs, CanonicalMode::Plain);
  CHECK(plain.valuation.value(1));
  CHECK(plain.valuation.value(2));
  CHECK_FALSE(plain.valuation.value(3));
  CHECK(plain.relation.contains(parse("p"), parse("q")));
  CHECK_FALSE(plain.relation.contains(parse("q"), parse("p")));

  Model swapped = canonical_model(*mcs, CanonicalMode::S);
  CHECK(swapped.relation.contains(parse("q"), parse("p")));
}

TEST_CASE("negation mode strips left operands to a fixed point") {
  BoundedMcs mcs;
  mcs.universe = subformula_closure({parse("!!p ~> q")});
  mcs.members.insert(parse("!!p ~> q"));

  Model plain = canonical_model(mcs, CanonicalMode::Plain);
  CHECK(plain.relation.contains(parse("!!p"), parse("q")));
  CHECK_FALSE(plain.relation.contains(parse("p"), parse("q")));

  Model stripped = canonical_model(mcs, CanonicalMode::N);
  CHECK(stripped.relation.contains(parse("!!p"), parse("q")));
  CHECK(stripped.relation.contains(parse("!p"), parse("q")));
  CHECK(stripped.relation.contains(parse("p"), parse("q")));
  CHECK(condition_check(stripped.relation, RelCondition::NCondition).holds());

  Model both = canonical_model(mcs, CanonicalMode::SN);
  CHECK(both.relation.contains(parse("q"), parse("!p")));
  CHECK(condition_check(both.relation, RelCondition::Both).holds());
}

TEST_CASE("relatedness conjunction members relate their operands") {
  std::vector<Formula> universe = subformula_closure({parse("p ^ q")});
  auto mcs = bounded_lindenbaum(ProofSystem::f(), {parse("p ^ q")}, universe);
  REQUIRE(mcs);
  CHECK(is_member(*mcs, "p ^ q"));

  Model m = canonical_model(*mcs, CanonicalMode::Plain);
  CHECK(m.relation.contains(parse("p"), parse("q")));
  CHECK(evaluate(m, parse("p ^ q")));
}

TEST_CASE("canonical adequacy on random universes") {
  Sampler sampler(19);
  int produced = 0;
  for (int round = 0; round < 60 && produced < 20; ++round) {
    std::vector<Formula> seeds;
    int seed_count = 2 + static_cast<int>(sampler.next(3));
    for (int i = 0; i < seed_count; ++i) {
      seeds.push_back(sampler.formula(3, 3));
    }
    std::vector<Formula> universe = subformula_closure(seeds);
    if (universe.size() > 40) continue;
    auto mcs = bounded_lindenbaum(ProofSystem::f(), {seeds[0]}, universe);
    if (!mcs) continue;
    ++produced;

    Model m = canonical_model(*mcs, CanonicalMode::Plain);
    for (const Formula& f : universe) {
      bool held = evaluate(m, f);
      bool member = mcs->members.count(f) > 0;
      CHECK(held == member);
    }
  }
  CHECK(produced >= 20);
}

TEST_CASE("closure modes satisfy their conditions on random universes") {
  Sampler sampler(23);
  struct ModeRow {
    ProofSystem sys;
    CanonicalMode mode;
    RelCondition condition;
  };
  std::vector<ModeRow> rows;
  rows.push_back({ProofSystem::fs(), CanonicalMode::S, RelCondition::Symmetry});
  rows.push_back({ProofSystem::fn(), CanonicalMode::N, RelCondition::NCondition});
  rows.push_back({ProofSystem::fsn(), CanonicalMode::SN, RelCondition::Both});

  for (const ModeRow& row : rows) {
    int produced = 0;
    for (int round = 0; round < 30 && produced < 8; ++round) {
      std::vector<Formula> seeds = {sampler.formula(3, 3), sampler.formula(2, 3)};
      std::vector<Formula> universe = subformula_closure(seeds);
      if (universe.size() > 25) continue;
      auto mcs = bounded_lindenbaum(row.sys, {seeds[0]}, universe);
      if (!mcs) continue;
      ++produced;
      Model m = canonical_model(*mcs, row.mode);
      CHECK(condition_check(m.relation, row.condition).holds());
    }
    CHECK(produced >= 8);
  }
}

}  // TEST_SUITE
