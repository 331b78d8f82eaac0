#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "epstein/interpolate.hpp"
#include "epstein/json_io.hpp"
#include "epstein/lindenbaum.hpp"
#include "epstein/parse.hpp"
#include "epstein/print.hpp"
#include "epstein/proof.hpp"
#include "epstein/sset.hpp"
#include "epstein/translate.hpp"
#include "epstein/witness.hpp"

namespace {

using namespace epstein;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return Json::parse(in);
}

Model load_model(const std::string& path) { return model_from_json(load_json(path)); }

// A model file works wherever only the relation matters; a bare relation
// document (recognized by its "kind" tag) does too.
Relation load_relation(const std::string& path) {
  Json j = load_json(path);
  if (j.contains("kind")) return relation_from_json(j);
  return relation_from_json(j.at("relation"));
}

Formula parse_arg(const std::string& text) {
  if (text.empty()) throw Error("no formula given; pass one as an argument or via --formula");
  return parse(text);
}

int emit(const Json& j, bool quiet, const std::string& plain, int code = 0) {
  if (quiet) {
    std::cout << plain << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return code;
}

ProofSystem system_named(const std::string& name) {
  return proof_system_from_json(Json(name));
}

RelCondition condition_named(const std::string& name) {
  if (name == "s" || name == "symmetry") return RelCondition::Symmetry;
  if (name == "n" || name == "n-condition") return RelCondition::NCondition;
  return RelCondition::Both;
}

Relation default_base(RelCondition c) {
  Formula p = Formula::letter(1);
  Formula q = Formula::letter(2);
  switch (c) {
    case RelCondition::Symmetry:
      return Relation::finite({{p, q}, {q, p}});
    case RelCondition::NCondition:
      return Relation::finite({{Formula::neg(p), q}, {p, q}});
    case RelCondition::Both:
      return Relation::empty();
  }
  return Relation::empty();
}

bool counterexample_passes(const CounterexampleRecord& rec) {
  if (rec.violation.status != ConditionVerdict::Status::Fails) return false;
  for (const auto& [valuation, verdict] : rec.membership_checks) {
    (void)valuation;
    if (!verdict.yes()) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Epstein relatedness semantics toolkit"};
  app.require_subcommand(0, 1);

  bool quiet = false;
  std::string formula_text;
  std::string model_file;
  std::string candidate_file;
  std::string proof_file;
  std::string cpl_text;
  std::string system_name = "F";
  std::string condition = "all";
  std::vector<std::string> premises;
  unsigned depth = 3;
  unsigned sweep_bound = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t omega_count = 50;
  std::size_t member_count = 10;
  std::size_t instance_count = 60;
  int fuzz_samples = 100;
  int fuzz_toggles = 20;

  std::function<int()> run;

  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("formula,--formula", formula_text, "formula in the surface syntax");
  };
  auto add_quiet = [&](CLI::App* sub) {
    sub->add_flag("--quiet", quiet, "plain text instead of JSON");
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--system", system_name, "proof system")
        ->check(CLI::IsMember({"F", "FS", "FN", "FSN"}));
  };

  {
    CLI::App* sub = app.add_subcommand("parse", "parse a formula and report its shape");
    add_formula(sub);
    add_quiet(sub);
    sub->callback([&]() {
      run = [&]() {
        Formula f = parse_arg(formula_text);
        Json letters = Json::array();
        for (unsigned v : vars(f)) letters.push_back(letter_name(v));
        Json j{{"formula", print(f)}, {"letters", std::move(letters)}, {"size", f.size()}};
        return emit(j, quiet, print(f));
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("print", "reprint a formula in canonical form");
    add_formula(sub);
    add_quiet(sub);
    sub->callback([&]() {
      run = [&]() {
        Formula f = parse_arg(formula_text);
        return emit(Json{{"formula", print(f)}}, quiet, print(f));
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("eval", "truth value of a formula in a model");
    add_formula(sub);
    add_quiet(sub);
    sub->add_option("--model", model_file, "model JSON file")->required();
    sub->callback([&]() {
      run = [&]() {
        Model m = load_model(model_file);
        bool value = evaluate(m, parse_arg(formula_text));
        return emit(Json{{"value", value}}, quiet, value ? "true" : "false", value ? 0 : 1);
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("validate", "does the relation validate the formula");
    add_formula(sub);
    add_quiet(sub);
    sub->add_option("--model", model_file, "model or relation JSON file")->required();
    sub->add_option("--jobs", jobs, "threads for the valuation sweep");
    sub->callback([&]() {
      run = [&]() {
        Relation r = load_relation(model_file);
        ValidatesOptions opts;
        opts.jobs = jobs;
        bool valid = relation_validates(r, parse_arg(formula_text), opts);
        return emit(Json{{"valid", valid}}, quiet, valid ? "valid" : "invalid", valid ? 0 : 1);
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("translate", "standard translation into the classical language");
    add_formula(sub);
    add_quiet(sub);
    sub->callback([&]() {
      run = [&]() {
        CplFormula st = translate(parse_arg(formula_text));
        std::string text = print_cpl(st);
        return emit(Json{{"translation", text}}, quiet, text);
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("theorem", "is the formula valid in every model");
    add_formula(sub);
    add_quiet(sub);
    sub->callback([&]() {
      run = [&]() {
        Formula f = parse_arg(formula_text);
        if (f_valid(f)) return emit(Json{{"verdict", "valid"}}, quiet, "valid");
        Json j{{"verdict", "invalid"}};
        if (std::optional<Model> m = countermodel(f)) j["countermodel"] = to_json(*m);
        return emit(j, quiet, "invalid", 1);
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("consequence", "does the conclusion follow from the premises");
    add_formula(sub);
    add_quiet(sub);
    sub->add_option("--premise", premises, "premise formula (repeatable)");
    sub->callback([&]() {
      run = [&]() {
        Formula conclusion = parse_arg(formula_text);
        std::vector<Formula> gamma;
        Formula chained = conclusion;
        for (auto it = premises.rbegin(); it != premises.rend(); ++it) {
          Formula p = parse(*it);
          gamma.push_back(p);
          chained = Formula::imp(p, chained);
        }
        if (f_consequence(gamma, conclusion)) {
          return emit(Json{{"verdict", "follows"}}, quiet, "follows");
        }
        Json j{{"verdict", "does not follow"}};
        if (std::optional<Model> m = countermodel(chained)) j["countermodel"] = to_json(*m);
        return emit(j, quiet, "does not follow", 1);
      };
    });
  }

  {
    CLI::App* proof = app.add_subcommand("proof", "proof operations");
    proof->require_subcommand(1);
    CLI::App* sub = proof->add_subcommand("check", "verify a Hilbert proof");
    add_quiet(sub);
    sub->add_option("--proof", proof_file, "proof JSON file")->required();
    sub->callback([&]() {
      run = [&]() {
        ProofDocument doc = proof_from_json(load_json(proof_file));
        ProofVerdict verdict = check_proof(doc.system, doc.proof);
        std::string plain = "accepted";
        if (!verdict.ok) {
          plain = "rejected";
          for (const LineVerdict& line : verdict.lines) {
            if (!line.ok) {
              plain += "; " + line.error;
              break;
            }
          }
        }
        return emit(to_json(verdict), quiet, plain, verdict.ok ? 0 : 1);
      };
    });
  }

  {
    CLI::App* omega = app.add_subcommand("omega", "toggle-set operations");
    omega->require_subcommand(1);
    CLI::App* sub = omega->add_subcommand("list", "first toggleable pairs of a model");
    add_quiet(sub);
    sub->add_option("--model", model_file, "model JSON file")->required();
    sub->add_option("--samples", omega_count, "number of pairs");
    sub->callback([&]() {
      run = [&]() {
        Model m = load_model(model_file);
        Json pairs = Json::array();
        std::string plain;
        for (const FormulaPair& p : enumerate_omega(m, omega_count)) {
          pairs.push_back(to_json(p));
          if (!plain.empty()) plain += "\n";
          plain += print(p);
        }
        return emit(Json{{"pairs", std::move(pairs)}}, quiet, plain);
      };
    });
  }

  {
    CLI::App* sset = app.add_subcommand("sset", "equivalence sphere operations");
    sset->require_subcommand(1);
    {
      CLI::App* sub = sset->add_subcommand("member", "is a candidate model in the sphere");
      add_quiet(sub);
      sub->add_option("--model", model_file, "reference model JSON file")->required();
      sub->add_option("--candidate", candidate_file, "candidate model JSON file")->required();
      sub->callback([&]() {
        run = [&]() {
          MembershipVerdict v = sset_member(load_model(model_file), load_model(candidate_file));
          const char* plain = v.kind == MembershipVerdict::Kind::Yes  ? "yes"
                              : v.kind == MembershipVerdict::Kind::No ? "no"
                                                                      : "unknown";
          return emit(to_json(v), quiet, plain, v.yes() ? 0 : 1);
        };
      });
    }
    {
      CLI::App* sub = sset->add_subcommand("sample", "distinct sphere members");
      add_quiet(sub);
      sub->add_option("--model", model_file, "model JSON file")->required();
      sub->add_option("--samples", member_count, "number of members");
      sub->add_option("--seed", seed, "sampling seed");
      sub->callback([&]() {
        run = [&]() {
          Json members = Json::array();
          for (const Model& m : sample_equivalents(load_model(model_file), member_count, seed)) {
            members.push_back(to_json(m));
          }
          std::string plain = std::to_string(members.size()) + " members";
          return emit(Json{{"members", std::move(members)}}, quiet, plain);
        };
      });
    }
  }

  {
    CLI::App* inv = app.add_subcommand("invariance", "sphere invariance checks");
    inv->require_subcommand(1);
    CLI::App* sub = inv->add_subcommand("fuzz", "search for a sphere violation");
    add_quiet(sub);
    sub->add_option("--cpl", cpl_text, "classical formula, pair atoms as a<f,g>");
    add_formula(sub);
    sub->add_option("--samples", fuzz_samples, "models to try");
    sub->add_option("--toggles", fuzz_toggles, "toggled neighbors per model");
    sub->add_option("--seed", seed, "sampling seed");
    sub->callback([&]() {
      run = [&]() {
        CplFormula target =
            cpl_text.empty() ? translate(parse_arg(formula_text)) : parse_cpl(cpl_text);
        auto witness = falsify_sset_invariance(target, fuzz_samples, fuzz_toggles, seed);
        if (!witness) {
          return emit(Json{{"witness", nullptr}}, quiet, "no violation found", 1);
        }
        Json j{{"witness",
                Json{{"model", to_json(witness->first)}, {"neighbor", to_json(witness->second)}}}};
        return emit(j, quiet, "violation found");
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("interpolate", "interpolant for a valid implication");
    add_formula(sub);
    add_quiet(sub);
    sub->add_option("--depth", depth, "separator search depth");
    sub->add_option("--jobs", jobs, "threads for the separator search");
    sub->callback([&]() {
      run = [&]() {
        Formula f = parse_arg(formula_text);
        if (!f.is_bin(Conn::Imp)) {
          throw Error("interpolate needs a top-level implication");
        }
        if (!f_valid(f)) {
          return emit(Json{{"verdict", "not valid"}}, quiet, "not valid", 1);
        }
        auto result = interpolate(f.left(), f.right(), depth, jobs);
        if (!result) {
          return emit(Json{{"verdict", "no interpolant within depth"}}, quiet,
                      "no interpolant within depth", 1);
        }
        return emit(to_json(*result), quiet, print(result->interpolant));
      };
    });
  }

  {
    CLI::App* demo = app.add_subcommand("demo", "verified walkthroughs");
    demo->require_subcommand(1);
    {
      CLI::App* sub = demo->add_subcommand("undefinability",
                                           "closure conditions are not theory-expressible");
      add_quiet(sub);
      sub->add_option("--condition", condition, "condition to break")
          ->check(CLI::IsMember({"s", "symmetry", "n", "n-condition", "both", "all"}));
      sub->callback([&]() {
        run = [&]() {
          std::vector<RelCondition> conditions;
          if (condition == "all") {
            conditions = {RelCondition::Symmetry, RelCondition::NCondition, RelCondition::Both};
          } else {
            conditions = {condition_named(condition)};
          }
          Json records = Json::object();
          bool all_pass = true;
          for (RelCondition c : conditions) {
            CounterexampleRecord rec = undefinability_counterexample(c, default_base(c));
            all_pass = all_pass && counterexample_passes(rec);
            records[condition_name(c)] = to_json(rec);
          }
          return emit(records, quiet, all_pass ? "pass" : "fail", all_pass ? 0 : 1);
        };
      });
    }
    {
      CLI::App* sub = demo->add_subcommand("incompleteness",
                                           "axiomatic extensions with no adequate relation set");
      add_quiet(sub);
      sub->add_option("--samples", instance_count, "instances per sampled check");
      sub->callback([&]() {
        run = [&]() {
          Json j;
          j["alpha"] = to_json(alpha_nonderivability_model());
          j["towers"] = to_json(kt_separation({1}, {2}));
          j["lambda"] = to_json(lambda_incompleteness({1, 3}, instance_count));
          bool all_pass = j["alpha"]["verdict"].get<bool>() &&
                          j["towers"]["verdict"].get<bool>() &&
                          j["lambda"]["verdict"].get<bool>();
          return emit(j, quiet, all_pass ? "pass" : "fail", all_pass ? 0 : 1);
        };
      });
    }
    {
      CLI::App* sub = demo->add_subcommand("inexpressibility",
                                           "no small formula expresses pair membership");
      add_quiet(sub);
      sub->add_option("--depth", sweep_bound, "connective budget for candidates");
      sub->callback([&]() {
        run = [&]() {
          WitnessReport report = inexpressibility_sweep(sweep_bound);
          return emit(to_json(report), quiet, report.verdict() ? "pass" : "fail",
                      report.verdict() ? 0 : 1);
        };
      });
    }
  }

  {
    CLI::App* sub = app.add_subcommand("lindenbaum", "bounded maximal consistent extension");
    add_quiet(sub);
    add_system(sub);
    sub->add_option("--premise", premises, "premise formula (repeatable)")->required();
    sub->callback([&]() {
      run = [&]() {
        std::vector<Formula> sigma;
        for (const std::string& text : premises) sigma.push_back(parse(text));
        std::vector<Formula> universe = subformula_closure(sigma);
        auto mcs = bounded_lindenbaum(system_named(system_name), sigma, universe);
        if (!mcs) {
          return emit(Json{{"consistent", false}}, quiet, "inconsistent", 1);
        }
        Json j = to_json(*mcs);
        j["consistent"] = true;
        return emit(j, quiet, std::to_string(mcs->members.size()) + " members");
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("canonical", "canonical model of a bounded extension");
    add_quiet(sub);
    add_system(sub);
    sub->add_option("--premise", premises, "premise formula (repeatable)")->required();
    sub->callback([&]() {
      run = [&]() {
        std::vector<Formula> sigma;
        for (const std::string& text : premises) sigma.push_back(parse(text));
        std::vector<Formula> universe = subformula_closure(sigma);
        ProofSystem sys = system_named(system_name);
        auto mcs = bounded_lindenbaum(sys, sigma, universe);
        if (!mcs) {
          return emit(Json{{"consistent", false}}, quiet, "inconsistent", 1);
        }
        CanonicalMode mode = CanonicalMode::Plain;
        if (system_name == "FS") mode = CanonicalMode::S;
        if (system_name == "FN") mode = CanonicalMode::N;
        if (system_name == "FSN") mode = CanonicalMode::SN;
        Model m = canonical_model(*mcs, mode);
        std::string plain = "model of " + std::to_string(mcs->members.size()) + " members";
        return emit(to_json(m), quiet, plain);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!run) {
    std::cout << app.help();
    return 2;
  }

  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
