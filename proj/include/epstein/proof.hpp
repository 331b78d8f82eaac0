#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "epstein/formula.hpp"

namespace epstein {

// An axiom pattern whose letters act as schema variables; the instances
// are exactly the substitution images of the pattern.
struct AxiomSchema {
  std::string name;
  Formula pattern;
};

// A Hilbert system over the relatedness language. Every system carries
// the two base axioms A1 and A2; FS adds the symmetry schema, FN the two
// negation schemas, FSN all five extensions. Custom systems extend the
// base system with a finite list of extra axioms, closed under
// substitution at check time.
class ProofSystem {
 public:
  static ProofSystem f();
  static ProofSystem fs();
  static ProofSystem fn();
  static ProofSystem fsn();
  static ProofSystem custom(std::vector<Formula> lambda);

  const std::string& name() const { return name_; }
  const std::vector<AxiomSchema>& schemas() const { return schemas_; }
  const std::vector<Formula>& lambda() const { return lambda_; }

  // Registry lookup by schema name, null when absent.
  const AxiomSchema* find_schema(const std::string& name) const;

 private:
  ProofSystem(std::string name, std::vector<AxiomSchema> schemas,
              std::vector<Formula> lambda);

  std::string name_;
  std::vector<AxiomSchema> schemas_;
  std::vector<Formula> lambda_;
};

// First schema in registry order whose pattern matches f, together with
// the matching substitution. Extra axioms and classical tautologies are
// not consulted here; they have their own justification forms.
std::optional<std::pair<std::string, Substitution>> is_axiom_instance(
    const ProofSystem& sys, const Formula& f);

struct PremiseRef {
  std::size_t index;
};
struct SchemaRef {
  std::string name;
};
struct CplTautology {};
struct LambdaRef {
  std::size_t index;
};
struct ModusPonens {
  std::size_t imp;
  std::size_t ant;
};

using Justification =
    std::variant<PremiseRef, SchemaRef, CplTautology, LambdaRef, ModusPonens>;

struct ProofLine {
  Formula formula;
  Justification just;
};

struct Proof {
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
};

struct LineVerdict {
  bool ok = true;
  std::string error;
};

struct ProofVerdict {
  bool ok = false;
  std::vector<LineVerdict> lines;
  explicit operator bool() const { return ok; }
};

// Verifies every line independently: premise references must cite an
// existing premise verbatim, schema and extra-axiom lines must match the
// named pattern, Cpl lines must have tautologous skeletons, and modus
// ponens must cite two earlier lines of the right shape. The whole proof
// is accepted when every line is.
ProofVerdict check_proof(const ProofSystem& sys, const Proof& proof);

}  // namespace epstein
