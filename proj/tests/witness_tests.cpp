#include <doctest.h>

#include "epstein/parse.hpp"
#include "epstein/print.hpp"
#include "epstein/witness.hpp"

using namespace epstein;

namespace {

Formula p = Formula::letter(1);

const WitnessCheck* find_check(const WitnessReport& r, const std::string& needle) {
  for (const WitnessCheck& c : r.checks) {
    if (c.description.find(needle) != std::string::npos) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("report verdict is the conjunction of its checks") {
  WitnessReport r;
  CHECK(r.verdict());
  r.checks.push_back({"a", 1, true});
  r.checks.push_back({"b", 3, true});
  CHECK(r.verdict());
  r.checks.push_back({"c", 2, false});
  CHECK(!r.verdict());
}

TEST_CASE("relation briefs") {
  CHECK(relation_brief(Relation::full()) == "all pairs");
  CHECK(relation_brief(Relation::empty()) == "no pairs");
  CHECK(relation_brief(Relation::finite({{p, p}})) == "{<p, p>}");
  CHECK(relation_brief(Relation::cofinite({{p, p}})) == "all pairs except {<p, p>}");
}

TEST_CASE("alpha report takes the contrapositive branch when <p, p> is missing") {
  for (const Relation& r :
       {Relation::cofinite({{p, p}}), Relation::empty(), Relation::finite({{p, Formula::letter(2)}})}) {
    WitnessReport report = alpha_forces_pp(r, 20, 5);
    CHECK(report.verdict());
    CHECK(report.objects.at("falsifying instance") == "p -> (p ~> p)");
    CHECK(find_check(report, "all-true valuation") != nullptr);
    CHECK(find_check(report, "sampled") == nullptr);
  }
}

TEST_CASE("alpha report validates instances on the full relation") {
  WitnessReport report = alpha_forces_pp(Relation::full(), 30, 7);
  CHECK(report.verdict());
  const WitnessCheck* sampled = find_check(report, "sampled");
  REQUIRE(sampled != nullptr);
  CHECK(sampled->count == 30);
  CHECK(sampled->pass);
}

TEST_CASE("alpha report records failures honestly on a bare diagonal pair") {
  WitnessReport report = alpha_forces_pp(Relation::finite({{p, p}}), 25, 11);
  CHECK(find_check(report, "p ~> p is validated")->pass);
  CHECK(!find_check(report, "sampled")->pass);
  CHECK(!report.verdict());
}

TEST_CASE("the nonderivability model separates alpha from p ~> p") {
  WitnessReport report = alpha_nonderivability_model();
  CHECK(report.verdict());
  CHECK(report.checks.size() == 3);
  CHECK(find_check(report, "falsifies p ~> p")->pass);
  CHECK(find_check(report, "critical instance")->pass);
  CHECK(find_check(report, "sampled")->count >= 100);
  CHECK(report.objects.at("relation") == "all pairs except {<p, p>}");
}

TEST_CASE("tower separation on the documented index pairs") {
  WitnessReport one_two = kt_separation({1}, {2});
  CHECK(one_two.verdict());
  CHECK(one_two.objects.at("separator") == "p ~> (p -> p)");

  WitnessReport two_three = kt_separation({2}, {3});
  CHECK(two_three.verdict());
  CHECK(two_three.objects.at("separator") == "p ~> (p -> (p -> p))");
}

TEST_CASE("tower separation is symmetric and picks the least fresh index") {
  WitnessReport left = kt_separation({1, 2}, {1});
  CHECK(left.objects.at("separator") == "p ~> (p -> (p -> p))");
  CHECK(left.verdict());

  WitnessReport right = kt_separation({1}, {1, 2});
  CHECK(right.objects.at("separator") == "p ~> (p -> (p -> p))");
  CHECK(right.verdict());
  CHECK(find_check(right, "index-1 tower") != nullptr);
}

TEST_CASE("tower separation rejects bad index sets") {
  CHECK_THROWS_AS(kt_separation({1}, {1}), DomainError);
  CHECK_THROWS_AS(kt_separation({}, {1}), DomainError);
  CHECK_THROWS_AS(kt_separation({1}, {}), DomainError);
  CHECK_THROWS_AS(kt_separation({0, 1}, {2}), DomainError);
}

TEST_CASE("lambda towers force p ~> p yet the model dodges it") {
  WitnessReport single = lambda_incompleteness({1}, 40);
  CHECK(single.verdict());
  CHECK(single.checks.size() == 3);
  CHECK(single.objects.at("towers") == "q ~> (p -> (q ~> p))");

  WitnessReport pair = lambda_incompleteness({1, 3}, 40);
  CHECK(pair.verdict());
  CHECK(pair.checks.size() == 5);

  CHECK_THROWS_AS(lambda_incompleteness({}, 10), DomainError);
  CHECK_THROWS_AS(lambda_incompleteness({0}, 10), DomainError);
}

TEST_CASE("sweep level counts follow the construction recurrence") {
  std::vector<SweepLevel> levels = inexpressibility_levels(5);
  REQUIRE(levels.size() == 6);
  CHECK(levels[0].formulas == 4);
  CHECK(levels[1].formulas == 100);
  CHECK(levels[2].formulas == 4900);
  CHECK(levels[3].formulas == 300100);
  CHECK(levels[4].formulas == 20584900);
  CHECK(levels[5].formulas == 1512840100);
  for (const SweepLevel& level : levels) CHECK(level.survivors == 0);
  CHECK(levels[0].validated == 1);
}

TEST_CASE("class tallies agree with the literal relation_validates sweep") {
  std::vector<SweepLevel> fast = inexpressibility_levels(3);
  std::vector<SweepLevel> reference = inexpressibility_reference(3);
  REQUIRE(fast.size() == reference.size());
  for (std::size_t c = 0; c < fast.size(); ++c) {
    CHECK(fast[c].formulas == reference[c].formulas);
    CHECK(fast[c].validated == reference[c].validated);
    CHECK(fast[c].survivors == reference[c].survivors);
  }
}

TEST_CASE("parallel literal sweep matches the serial one") {
  std::vector<SweepLevel> serial = inexpressibility_reference(2, 1);
  std::vector<SweepLevel> parallel = inexpressibility_reference(2, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t c = 0; c < serial.size(); ++c) {
    CHECK(serial[c].formulas == parallel[c].formulas);
    CHECK(serial[c].validated == parallel[c].validated);
    CHECK(serial[c].survivors == parallel[c].survivors);
  }
}

TEST_CASE("literal sweep refuses unbounded work") {
  CHECK_THROWS_AS(inexpressibility_reference(4), CapacityError);
}

TEST_CASE("sweep report passes and carries the specific eliminations") {
  WitnessReport report = inexpressibility_sweep(5);
  CHECK(report.verdict());
  CHECK(report.checks.size() == 8);
  CHECK(find_check(report, "5 connectives")->count == 1512840100);
  CHECK(find_check(report, "T ~> F")->pass);
  CHECK(find_check(report, "p | !p")->pass);
  CHECK(report.objects.at("relation") == "{<p0 | !p0, !(p0 | !p0)>}");
}
