#include "epstein/json_io.hpp"

#include "epstein/parse.hpp"
#include "epstein/print.hpp"

namespace epstein {

namespace {

Json pairs_to_json(const std::set<FormulaPair>& pairs) {
  Json out = Json::array();
  for (const FormulaPair& p : pairs) out.push_back(to_json(p));
  return out;
}

std::set<FormulaPair> pairs_from_json(const Json& j) {
  std::set<FormulaPair> out;
  for (const Json& entry : j) out.insert(pair_from_json(entry));
  return out;
}

Json formulas_to_json(const std::vector<Formula>& fs) {
  Json out = Json::array();
  for (const Formula& f : fs) out.push_back(print(f));
  return out;
}

std::vector<Formula> formulas_from_json(const Json& j) {
  std::vector<Formula> out;
  for (const Json& entry : j) out.push_back(formula_from_json(entry));
  return out;
}

unsigned letter_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<unsigned>();
  Formula f = parse(j.get<std::string>());
  if (!f.is_letter()) throw DomainError("valuation entries must be letters");
  return f.letter_index();
}

Json interp_pair_to_json(const InterpPair& t) {
  Json gamma = Json::array();
  for (const Formula& f : t.gamma) gamma.push_back(print(f));
  Json sigma = Json::array();
  for (const Formula& f : t.sigma) sigma.push_back(print(f));
  return Json{{"gamma", std::move(gamma)}, {"sigma", std::move(sigma)}};
}

InterpPair interp_pair_from_json(const Json& j) {
  InterpPair t;
  for (const Json& entry : j.at("gamma")) t.gamma.insert(formula_from_json(entry));
  for (const Json& entry : j.at("sigma")) t.sigma.insert(formula_from_json(entry));
  return t;
}

}  // namespace

Json to_json(const Formula& f) { return print(f); }

Json to_json(const FormulaPair& p) { return Json::array({print(p.first), print(p.second)}); }

Json to_json(const Valuation& v) {
  Json out;
  out["default"] = v.default_value() ? 1 : 0;
  Json exceptions = Json::array();
  for (const auto& [letter, value] : v.exceptions()) {
    (void)value;
    exceptions.push_back(letter);
  }
  out[v.default_value() ? "false" : "true"] = std::move(exceptions);
  return out;
}

Valuation valuation_from_json(const Json& j) {
  const Json& def = j.at("default");
  bool default_value = def.is_boolean() ? def.get<bool>() : def.get<int>() != 0;
  Valuation v(default_value);
  if (j.contains("true")) {
    for (const Json& entry : j["true"]) v.set(letter_from_json(entry), true);
  }
  if (j.contains("false")) {
    for (const Json& entry : j["false"]) v.set(letter_from_json(entry), false);
  }
  return v;
}

Json to_json(const Relation& r) {
  switch (r.kind()) {
    case Relation::Kind::Finite:
      return Json{{"kind", "finite"}, {"pairs", pairs_to_json(r.pairs())}};
    case Relation::Kind::Cofinite:
      return Json{{"kind", "cofinite"}, {"excluded", pairs_to_json(r.pairs())}};
    case Relation::Kind::Full:
      return Json{{"kind", "full"}};
    case Relation::Kind::Empty:
      return Json{{"kind", "empty"}};
    case Relation::Kind::Tower: {
      Json indices = Json::array();
      for (unsigned n : r.indices()) indices.push_back(n);
      const char* variant =
          r.variant() == Relation::TowerVariant::R0T ? "r0t" : "superset-closure";
      return Json{{"kind", "tower"}, {"indices", std::move(indices)}, {"variant", variant}};
    }
    case Relation::Kind::Override:
      return Json{{"kind", "override"},
                  {"base", to_json(r.base())},
                  {"add", pairs_to_json(r.added())},
                  {"remove", pairs_to_json(r.removed())}};
  }
  throw DomainError("unhandled relation kind");
}

Relation relation_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") return Relation::finite(pairs_from_json(j.at("pairs")));
  if (kind == "cofinite") return Relation::cofinite(pairs_from_json(j.at("excluded")));
  if (kind == "full") return Relation::full();
  if (kind == "empty") return Relation::empty();
  if (kind == "tower") {
    std::set<unsigned> indices;
    for (const Json& entry : j.at("indices")) indices.insert(entry.get<unsigned>());
    const std::string variant = j.at("variant").get<std::string>();
    if (variant != "r0t" && variant != "superset-closure") {
      throw DomainError("unknown tower variant: " + variant);
    }
    return Relation::tower(std::move(indices), variant == "r0t"
                                                   ? Relation::TowerVariant::R0T
                                                   : Relation::TowerVariant::SupersetClosure);
  }
  if (kind == "override") {
    return Relation::override_with(relation_from_json(j.at("base")),
                                   pairs_from_json(j.at("add")),
                                   pairs_from_json(j.at("remove")));
  }
  throw DomainError("unknown relation kind: " + kind);
}

Json to_json(const Model& m) {
  return Json{{"valuation", to_json(m.valuation)}, {"relation", to_json(m.relation)}};
}

Model model_from_json(const Json& j) {
  return Model{valuation_from_json(j.at("valuation")), relation_from_json(j.at("relation"))};
}

Json to_json(const ProofSystem& sys) {
  if (sys.name() == "Custom") {
    Json axioms = Json::array();
    for (const Formula& f : sys.lambda()) axioms.push_back(print(f));
    return Json{{"custom_axioms", std::move(axioms)}};
  }
  return sys.name();
}

ProofSystem proof_system_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "F") return ProofSystem::f();
    if (name == "FS") return ProofSystem::fs();
    if (name == "FN") return ProofSystem::fn();
    if (name == "FSN") return ProofSystem::fsn();
    throw DomainError("unknown proof system: " + name);
  }
  return ProofSystem::custom(formulas_from_json(j.at("custom_axioms")));
}

namespace {

Json justification_to_json(const Justification& just) {
  struct Writer {
    Json operator()(const PremiseRef& j) const {
      return Json{{"type", "premise"}, {"index", j.index}};
    }
    Json operator()(const SchemaRef& j) const {
      return Json{{"type", "schema"}, {"name", j.name}};
    }
    Json operator()(const CplTautology&) const { return Json{{"type", "cpl"}}; }
    Json operator()(const LambdaRef& j) const {
      return Json{{"type", "lambda"}, {"index", j.index}};
    }
    Json operator()(const ModusPonens& j) const {
      return Json{{"type", "mp"}, {"imp", j.imp}, {"ant", j.ant}};
    }
  };
  return std::visit(Writer{}, just);
}

Justification justification_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "premise") return PremiseRef{j.at("index").get<std::size_t>()};
  if (type == "schema") return SchemaRef{j.at("name").get<std::string>()};
  if (type == "cpl") return CplTautology{};
  if (type == "lambda") return LambdaRef{j.at("index").get<std::size_t>()};
  if (type == "mp") {
    return ModusPonens{j.at("imp").get<std::size_t>(), j.at("ant").get<std::size_t>()};
  }
  throw DomainError("unknown justification type: " + type);
}

}  // namespace

Json to_json(const ProofSystem& sys, const Proof& proof) {
  Json lines = Json::array();
  for (const ProofLine& line : proof.lines) {
    lines.push_back(
        Json{{"formula", print(line.formula)}, {"just", justification_to_json(line.just)}});
  }
  return Json{{"system", to_json(sys)},
              {"premises", formulas_to_json(proof.premises)},
              {"lines", std::move(lines)}};
}

ProofDocument proof_from_json(const Json& j) {
  ProofDocument doc{proof_system_from_json(j.at("system")), {}};
  if (j.contains("premises")) doc.proof.premises = formulas_from_json(j["premises"]);
  for (const Json& entry : j.at("lines")) {
    doc.proof.lines.push_back(ProofLine{formula_from_json(entry.at("formula")),
                                        justification_from_json(entry.at("just"))});
  }
  return doc;
}

Json to_json(const ProofVerdict& verdict) {
  Json lines = Json::array();
  for (const LineVerdict& line : verdict.lines) {
    Json entry{{"ok", line.ok}};
    if (!line.ok) entry["error"] = line.error;
    lines.push_back(std::move(entry));
  }
  return Json{{"ok", verdict.ok}, {"lines", std::move(lines)}};
}

Json to_json(const MembershipVerdict& v) {
  Json out;
  switch (v.kind) {
    case MembershipVerdict::Kind::Yes: out["verdict"] = "yes"; break;
    case MembershipVerdict::Kind::No: out["verdict"] = "no"; break;
    case MembershipVerdict::Kind::Unknown: out["verdict"] = "unknown"; break;
  }
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.distinguishing) out["distinguishing"] = print(*v.distinguishing);
  if (v.witness_pair) out["witness_pair"] = to_json(*v.witness_pair);
  return out;
}

Json to_json(const ConditionVerdict& v) {
  Json out;
  switch (v.status) {
    case ConditionVerdict::Status::Holds: out["status"] = "holds"; break;
    case ConditionVerdict::Status::Fails: out["status"] = "fails"; break;
    case ConditionVerdict::Status::Unknown: out["status"] = "unknown"; break;
  }
  if (v.missing) out["missing"] = to_json(*v.missing);
  if (v.present) out["present"] = to_json(*v.present);
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

namespace {

MembershipVerdict membership_from_json(const Json& j) {
  MembershipVerdict v;
  const std::string kind = j.at("verdict").get<std::string>();
  if (kind == "yes") {
    v.kind = MembershipVerdict::Kind::Yes;
  } else if (kind == "no") {
    v.kind = MembershipVerdict::Kind::No;
  } else if (kind == "unknown") {
    v.kind = MembershipVerdict::Kind::Unknown;
  } else {
    throw DomainError("unknown membership verdict: " + kind);
  }
  if (j.contains("reason")) v.reason = j["reason"].get<std::string>();
  if (j.contains("distinguishing")) v.distinguishing = formula_from_json(j["distinguishing"]);
  if (j.contains("witness_pair")) v.witness_pair = pair_from_json(j["witness_pair"]);
  return v;
}

ConditionVerdict condition_verdict_from_json(const Json& j) {
  ConditionVerdict v;
  const std::string status = j.at("status").get<std::string>();
  if (status == "holds") {
    v.status = ConditionVerdict::Status::Holds;
  } else if (status == "fails") {
    v.status = ConditionVerdict::Status::Fails;
  } else if (status == "unknown") {
    v.status = ConditionVerdict::Status::Unknown;
  } else {
    throw DomainError("unknown condition status: " + status);
  }
  if (j.contains("missing")) v.missing = pair_from_json(j["missing"]);
  if (j.contains("present")) v.present = pair_from_json(j["present"]);
  if (j.contains("detail")) v.detail = j["detail"].get<std::string>();
  return v;
}

RelCondition condition_from_name(const std::string& name) {
  if (name == condition_name(RelCondition::Symmetry)) return RelCondition::Symmetry;
  if (name == condition_name(RelCondition::NCondition)) return RelCondition::NCondition;
  if (name == condition_name(RelCondition::Both)) return RelCondition::Both;
  throw DomainError("unknown condition: " + name);
}

}  // namespace

Json to_json(const CounterexampleRecord& rec) {
  Json checks = Json::array();
  for (const auto& [valuation, verdict] : rec.membership_checks) {
    checks.push_back(Json{{"valuation", to_json(valuation)}, {"verdict", to_json(verdict)}});
  }
  return Json{{"condition", condition_name(rec.condition)},
              {"base", to_json(rec.base)},
              {"modified", to_json(rec.modified)},
              {"toggled_pair", to_json(rec.toggled)},
              {"violation_witness", to_json(rec.violation)},
              {"membership_checks", std::move(checks)}};
}

CounterexampleRecord counterexample_from_json(const Json& j) {
  CounterexampleRecord rec{condition_from_name(j.at("condition").get<std::string>()),
                           relation_from_json(j.at("base")),
                           relation_from_json(j.at("modified")),
                           pair_from_json(j.at("toggled_pair")),
                           condition_verdict_from_json(j.at("violation_witness")),
                           {}};
  for (const Json& entry : j.at("membership_checks")) {
    rec.membership_checks.emplace_back(valuation_from_json(entry.at("valuation")),
                                       membership_from_json(entry.at("verdict")));
  }
  return rec;
}

Json to_json(const TraceStep& step) {
  return Json{{"pair", interp_pair_to_json(step.pair)},
              {"branch", step.branch},
              {"separator_found", step.separator_found}};
}

Json to_json(const InterpolationResult& result) {
  Json trace = Json::array();
  for (const TraceStep& step : result.trace) trace.push_back(to_json(step));
  return Json{{"interpolant", print(result.interpolant)},
              {"checks",
               Json{{"left", result.left_check},
                    {"right", result.right_check},
                    {"vars", result.var_check}}},
              {"trace", std::move(trace)}};
}

InterpolationResult interpolation_from_json(const Json& j) {
  InterpolationResult result{formula_from_json(j.at("interpolant")),
                             j.at("checks").at("left").get<bool>(),
                             j.at("checks").at("right").get<bool>(),
                             j.at("checks").at("vars").get<bool>(),
                             {}};
  for (const Json& entry : j.at("trace")) {
    result.trace.push_back(TraceStep{interp_pair_from_json(entry.at("pair")),
                                     entry.at("branch").get<std::string>(),
                                     entry.at("separator_found").get<bool>()});
  }
  return result;
}

Json to_json(const WitnessReport& report) {
  Json checks = Json::array();
  for (const WitnessCheck& c : report.checks) {
    checks.push_back(Json{{"desc", c.description}, {"n", c.count}, {"pass", c.pass}});
  }
  Json objects = Json::object();
  for (const auto& [key, value] : report.objects) objects[key] = value;
  return Json{{"lemma", report.lemma},
              {"objects", std::move(objects)},
              {"checks", std::move(checks)},
              {"verdict", report.verdict()}};
}

WitnessReport witness_report_from_json(const Json& j) {
  WitnessReport report;
  report.lemma = j.at("lemma").get<std::string>();
  for (const auto& [key, value] : j.at("objects").items()) {
    report.objects[key] = value.get<std::string>();
  }
  for (const Json& entry : j.at("checks")) {
    report.checks.push_back(WitnessCheck{entry.at("desc").get<std::string>(),
                                         entry.at("n").get<std::size_t>(),
                                         entry.at("pass").get<bool>()});
  }
  if (j.contains("verdict") && j["verdict"].get<bool>() != report.verdict()) {
    throw DomainError("stored verdict disagrees with the checks");
  }
  return report;
}

Json to_json(const BoundedMcs& mcs) {
  Json members = Json::array();
  for (const Formula& f : mcs.members) members.push_back(print(f));
  return Json{{"universe", formulas_to_json(mcs.universe)}, {"members", std::move(members)}};
}

BoundedMcs bounded_mcs_from_json(const Json& j) {
  BoundedMcs mcs;
  mcs.universe = formulas_from_json(j.at("universe"));
  for (const Json& entry : j.at("members")) mcs.members.insert(formula_from_json(entry));
  return mcs;
}

Formula formula_from_json(const Json& j) { return parse(j.get<std::string>()); }

FormulaPair pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("formula pairs are two-element arrays");
  return {formula_from_json(j[0]), formula_from_json(j[1])};
}

}  // namespace epstein
