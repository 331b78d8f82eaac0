#include "epstein/proof.hpp"

#include <utility>

#include "epstein/parse.hpp"
#include "epstein/sat.hpp"
#include "epstein/translate.hpp"

namespace epstein {

namespace {

AxiomSchema make_schema(const char* name, const char* pattern) {
  return AxiomSchema{name, parse(pattern)};
}

std::vector<AxiomSchema> registry(bool with_s, bool with_n, bool with_sn) {
  std::vector<AxiomSchema> schemas;
  schemas.push_back(make_schema("A1", "(p ~> q) -> (p -> q)"));
  schemas.push_back(make_schema("A2", "(p ^ q) <-> ((p ~> q) & (p & q))"));
  if (with_s) {
    schemas.push_back(make_schema("s", "(p ~> q) -> ((q ~> p) | !(q -> p))"));
  }
  if (with_n) {
    schemas.push_back(make_schema("n1", "(!p ~> q) -> ((p ~> q) | !(p -> q))"));
    schemas.push_back(make_schema("n2", "((!!p ~> q) & !(!p -> q)) -> (p ~> q)"));
  }
  if (with_sn) {
    schemas.push_back(make_schema("sn", "(!(p -> q) & (!p ~> q)) -> (q ~> p)"));
    schemas.push_back(make_schema("ns", "(!(!p -> q) & (q ~> !p)) -> (p ~> q)"));
  }
  return schemas;
}

}  // namespace

ProofSystem::ProofSystem(std::string name, std::vector<AxiomSchema> schemas,
                         std::vector<Formula> lambda)
    : name_(std::move(name)),
      schemas_(std::move(schemas)),
      lambda_(std::move(lambda)) {}

ProofSystem ProofSystem::f() {
  return ProofSystem("F", registry(false, false, false), {});
}

ProofSystem ProofSystem::fs() {
  return ProofSystem("FS", registry(true, false, false), {});
}

ProofSystem ProofSystem::fn() {
  return ProofSystem("FN", registry(false, true, false), {});
}

ProofSystem ProofSystem::fsn() {
  return ProofSystem("FSN", registry(true, true, true), {});
}

ProofSystem ProofSystem::custom(std::vector<Formula> lambda) {
  return ProofSystem("Custom", registry(false, false, false), std::move(lambda));
}

const AxiomSchema* ProofSystem::find_schema(const std::string& name) const {
  for (const AxiomSchema& schema : schemas_) {
    if (schema.name == name) return &schema;
  }
  return nullptr;
}

std::optional<std::pair<std::string, Substitution>> is_axiom_instance(
    const ProofSystem& sys, const Formula& f) {
  for (const AxiomSchema& schema : sys.schemas()) {
    std::optional<Substitution> s = match_schema(schema.pattern, f);
    if (s) return std::make_pair(schema.name, *s);
  }
  return std::nullopt;
}

namespace {

struct LineChecker {
  const ProofSystem& sys;
  const Proof& proof;
  std::size_t index;

  LineVerdict fail(std::string message) const {
    return LineVerdict{false,
                       "line " + std::to_string(index) + ": " + std::move(message)};
  }

  const Formula& formula() const { return proof.lines[index].formula; }

  LineVerdict operator()(const PremiseRef& j) const {
    if (j.index >= proof.premises.size()) {
      return fail("premise index " + std::to_string(j.index) + " out of range");
    }
    if (formula() != proof.premises[j.index]) {
      return fail("formula differs from premise " + std::to_string(j.index));
    }
    return LineVerdict{};
  }

  LineVerdict operator()(const SchemaRef& j) const {
    const AxiomSchema* schema = sys.find_schema(j.name);
    if (!schema) return fail("no schema named " + j.name);
    if (!match_schema(schema->pattern, formula())) {
      return fail("formula is not an instance of " + j.name);
    }
    return LineVerdict{};
  }

  LineVerdict operator()(const CplTautology&) const {
    if (!is_tautology(skeleton(formula()))) {
      return fail("skeleton is not a classical tautology");
    }
    return LineVerdict{};
  }

  LineVerdict operator()(const LambdaRef& j) const {
    if (j.index >= sys.lambda().size()) {
      return fail("extra axiom index " + std::to_string(j.index) + " out of range");
    }
    if (!match_schema(sys.lambda()[j.index], formula())) {
      return fail("formula is not an instance of extra axiom " +
                  std::to_string(j.index));
    }
    return LineVerdict{};
  }

  LineVerdict operator()(const ModusPonens& j) const {
    if (j.imp >= index || j.ant >= index) {
      return fail("modus ponens must cite earlier lines");
    }
    Formula expected = Formula::imp(proof.lines[j.ant].formula, formula());
    if (proof.lines[j.imp].formula != expected) {
      return fail("line " + std::to_string(j.imp) + " is not line " +
                  std::to_string(j.ant) + " -> this formula");
    }
    return LineVerdict{};
  }
};

}  // namespace

ProofVerdict check_proof(const ProofSystem& sys, const Proof& proof) {
  ProofVerdict verdict;
  verdict.ok = true;
  verdict.lines.reserve(proof.lines.size());
  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    LineChecker checker{sys, proof, i};
    LineVerdict lv = std::visit(checker, proof.lines[i].just);
    if (!lv.ok) verdict.ok = false;
    verdict.lines.push_back(std::move(lv));
  }
  return verdict;
}

}  // namespace epstein
