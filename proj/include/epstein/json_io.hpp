#pragma once

#include <json.hpp>

#include "epstein/interpolate.hpp"
#include "epstein/lindenbaum.hpp"
#include "epstein/proof.hpp"
#include "epstein/sset.hpp"
#include "epstein/witness.hpp"

namespace epstein {

using Json = nlohmann::json;

// Formulas serialize as surface-syntax strings, pairs as two-element
// arrays. Object keys come out sorted, so equal values dump to equal bytes.

Json to_json(const Formula& f);
Json to_json(const FormulaPair& p);
Json to_json(const Valuation& v);
Json to_json(const Relation& r);
Json to_json(const Model& m);
Json to_json(const ProofSystem& sys);
Json to_json(const ProofSystem& sys, const Proof& proof);
Json to_json(const ProofVerdict& verdict);
Json to_json(const MembershipVerdict& v);
Json to_json(const ConditionVerdict& v);
Json to_json(const CounterexampleRecord& rec);
Json to_json(const TraceStep& step);
Json to_json(const InterpolationResult& result);
Json to_json(const WitnessReport& report);
Json to_json(const BoundedMcs& mcs);

Formula formula_from_json(const Json& j);
FormulaPair pair_from_json(const Json& j);
Valuation valuation_from_json(const Json& j);
Relation relation_from_json(const Json& j);
Model model_from_json(const Json& j);
ProofSystem proof_system_from_json(const Json& j);

struct ProofDocument {
  ProofSystem system;
  Proof proof;
};
ProofDocument proof_from_json(const Json& j);

CounterexampleRecord counterexample_from_json(const Json& j);
InterpolationResult interpolation_from_json(const Json& j);
// Rejects a stored verdict that disagrees with the checks.
WitnessReport witness_report_from_json(const Json& j);
BoundedMcs bounded_mcs_from_json(const Json& j);

}  // namespace epstein
