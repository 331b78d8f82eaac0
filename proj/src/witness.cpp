#include "epstein/witness.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "epstein/print.hpp"
#include "epstein/sample.hpp"

namespace epstein {

bool WitnessReport::verdict() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const WitnessCheck& c) { return c.pass; });
}

namespace {

Formula p_letter() { return Formula::letter(1); }
Formula q_letter() { return Formula::letter(2); }

Formula alpha() { return Formula::imp(p_letter(), Formula::rel_imp(q_letter(), p_letter())); }

Formula pp() { return Formula::rel_imp(p_letter(), p_letter()); }

void require_indices(const std::set<unsigned>& s, const char* who) {
  if (s.empty()) throw DomainError(std::string(who) + " needs a nonempty index set");
  if (*s.begin() == 0) throw DomainError(std::string(who) + " indices start at 1");
}

}  // namespace

std::string relation_brief(const Relation& r) {
  std::optional<Relation::FinCo> fc = r.finco_form();
  if (!fc) {
    return r.kind() == Relation::Kind::Tower ? "tower relation" : "override relation";
  }
  if (fc->pairs.empty()) return fc->cofinite ? "all pairs" : "no pairs";
  std::ostringstream out;
  out << (fc->cofinite ? "all pairs except {" : "{");
  bool first = true;
  for (const FormulaPair& p : fc->pairs) {
    if (!first) out << ", ";
    first = false;
    out << print(p);
  }
  out << "}";
  return out.str();
}

WitnessReport alpha_forces_pp(const Relation& r, std::size_t sample, std::uint64_t seed) {
  WitnessReport report;
  report.lemma = "validating all instances of alpha forces p ~> p";
  Formula a = alpha();
  report.objects["alpha"] = print(a);
  report.objects["relation"] = relation_brief(r);

  if (!r.contains(p_letter(), p_letter())) {
    Formula inst = Formula::imp(p_letter(), pp());
    report.objects["falsifying instance"] = print(inst);
    Model all_true{Valuation(true), r};
    report.checks.push_back(
        {"the all-true valuation falsifies the instance with p substituted for q", 1,
         !evaluate(all_true, inst)});
    report.checks.push_back(
        {"p ~> p is not validated, matching the missing pair", 1, !relation_validates(r, pp())});
    return report;
  }

  report.checks.push_back({"p ~> p is validated", 1, relation_validates(r, pp())});
  Sampler sampler(seed);
  std::size_t good = 0;
  for (std::size_t i = 0; i < sample; ++i) {
    Substitution sub = sampler.substitution(vars(a), 3);
    if (relation_validates(r, substitute(sub, a))) ++good;
  }
  report.checks.push_back({"sampled substitution instances of alpha are validated", sample,
                           good == sample});
  return report;
}

WitnessReport alpha_nonderivability_model() {
  WitnessReport report;
  report.lemma = "p ~> p is not a consequence of the alpha instances";
  Model m{Valuation(false), Relation::cofinite({{p_letter(), p_letter()}})};
  report.objects["alpha"] = print(alpha());
  report.objects["valuation"] = "all letters false";
  report.objects["relation"] = relation_brief(m.relation);

  report.checks.push_back({"the model falsifies p ~> p", 1, !evaluate(m, pp())});
  Formula critical = Formula::imp(p_letter(), pp());
  report.checks.push_back(
      {"the critical instance with p substituted for q holds", 1, evaluate(m, critical)});

  Sampler sampler(911);
  const std::size_t rounds = 128;
  std::size_t good = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Substitution sub = sampler.substitution(vars(alpha()), 3);
    if (evaluate(m, substitute(sub, alpha()))) ++good;
  }
  report.checks.push_back(
      {"sampled substitution instances of alpha hold in the model", rounds, good == rounds});
  return report;
}

WitnessReport kt_separation(const std::set<unsigned>& t, const std::set<unsigned>& v) {
  require_indices(t, "kt_separation");
  require_indices(v, "kt_separation");
  if (t == v) throw DomainError("kt_separation needs distinct index sets");

  std::vector<unsigned> diff;
  std::set_difference(t.begin(), t.end(), v.begin(), v.end(), std::back_inserter(diff));
  const std::set<unsigned>* other = &v;
  if (diff.empty()) {
    std::set_difference(v.begin(), v.end(), t.begin(), t.end(), std::back_inserter(diff));
    other = &t;
  }
  unsigned n = diff.front();

  Formula tower = imp_tower(p_letter(), n);
  Formula separator = Formula::rel_imp(p_letter(), tower);
  Model m{Valuation(false), Relation::cofinite({{p_letter(), tower}})};

  WitnessReport report;
  report.lemma = "distinct tower index sets generate distinct logics";
  report.objects["separator"] = print(separator);
  report.objects["valuation"] = "all letters false";
  report.objects["relation"] = relation_brief(m.relation);

  report.checks.push_back({"the model falsifies the separating tower", 1, !evaluate(m, separator)});

  Sampler sampler(913);
  const std::size_t per_index = 40;
  for (unsigned k : *other) {
    Formula base = Formula::rel_imp(p_letter(), imp_tower(p_letter(), k));
    std::size_t good = evaluate(m, base) ? 1 : 0;
    for (std::size_t i = 0; i < per_index; ++i) {
      Substitution sub = sampler.substitution(vars(base), 3);
      if (evaluate(m, substitute(sub, base))) ++good;
    }
    report.checks.push_back({"instances of the index-" + std::to_string(k) + " tower hold",
                             per_index + 1, good == per_index + 1});
  }
  return report;
}

WitnessReport lambda_incompleteness(const std::set<unsigned>& s, std::size_t sample) {
  require_indices(s, "lambda_incompleteness");

  WitnessReport report;
  report.lemma = "the q ~> p^n towers force p ~> p without deriving it";
  {
    std::ostringstream towers;
    bool first = true;
    for (unsigned n : s) {
      if (!first) towers << ", ";
      first = false;
      towers << print(Formula::rel_imp(q_letter(), lambda_tower(p_letter(), q_letter(), n)));
    }
    report.objects["towers"] = towers.str();
  }

  const std::array<Relation, 2> lacking = {Relation::cofinite({{p_letter(), p_letter()}}),
                                           Relation::empty()};
  for (unsigned n : s) {
    Formula inst = Formula::rel_imp(p_letter(), lambda_tower(p_letter(), p_letter(), n));
    std::size_t holds = 0;
    for (const Relation& r : lacking) {
      Model m{Valuation(true), r};
      if (evaluate(m, inst)) ++holds;
    }
    report.checks.push_back(
        {"with <p, p> unrelated and p true, the substituted index-" + std::to_string(n) +
             " tower fails",
         lacking.size(), holds == 0});
  }

  Model m{Valuation(false), Relation::cofinite({{p_letter(), p_letter()}})};
  report.objects["valuation"] = "all letters false";
  report.objects["relation"] = relation_brief(m.relation);
  report.checks.push_back({"the model falsifies p ~> p", 1, !evaluate(m, pp())});

  Sampler sampler(917);
  for (unsigned n : s) {
    Formula base = Formula::rel_imp(q_letter(), lambda_tower(p_letter(), q_letter(), n));
    Substitution critical{{2u, p_letter()}};
    std::size_t good = evaluate(m, substitute(critical, base)) ? 1 : 0;
    for (std::size_t i = 0; i < sample; ++i) {
      Substitution sub = sampler.substitution(vars(base), 3);
      if (evaluate(m, substitute(sub, base))) ++good;
    }
    report.checks.push_back({"instances of the index-" + std::to_string(n) +
                                 " tower hold in the model",
                             sample + 1, good == sample + 1});
  }
  return report;
}

namespace {

// Candidate classes for the expressibility sweep. A class is the pair of
// 4-valuation truth vectors (one per inspected relation) plus whether the
// formula is structurally T, structurally F, or neither; that is everything
// the connectives can see, so counting classes counts formulas exactly.
constexpr unsigned kOther = 0;
constexpr unsigned kTop = 1;
constexpr unsigned kBot = 2;
constexpr unsigned kClasses = 16 * 16 * 3;

constexpr unsigned class_index(unsigned tv0, unsigned tve, unsigned cls) {
  return tv0 | (tve << 4) | (cls << 8);
}

struct LevelCounts {
  std::array<std::uint64_t, kClasses> n{};
};

void add_binary_images(std::array<std::uint64_t, kClasses>& out, unsigned ls, unsigned rs,
                       std::uint64_t count) {
  unsigned l0 = ls & 15, le = (ls >> 4) & 15, lc = ls >> 8;
  unsigned r0 = rs & 15, re = (rs >> 4) & 15, rc = rs >> 8;
  out[class_index(l0 & r0, le & re, kOther)] += count;
  out[class_index(l0 | r0, le | re, kOther)] += count;
  out[class_index((~l0 | r0) & 15, (~le | re) & 15, kOther)] += count;
  out[class_index(~(l0 ^ r0) & 15, ~(le ^ re) & 15, kOther)] += count;
  unsigned pair_mask = (lc == kTop && rc == kBot) ? 15 : 0;
  out[class_index((~l0 | r0) & pair_mask, 0, kOther)] += count;
  out[class_index(l0 & r0 & pair_mask, 0, kOther)] += count;
}

std::vector<SweepLevel> tally(const std::vector<LevelCounts>& levels) {
  std::vector<SweepLevel> out(levels.size());
  for (std::size_t c = 0; c < levels.size(); ++c) {
    for (unsigned s = 0; s < kClasses; ++s) {
      std::uint64_t k = levels[c].n[s];
      if (k == 0) continue;
      out[c].formulas += k;
      if ((s & 15) == 15) {
        out[c].validated += k;
        if (((s >> 4) & 15) != 15) out[c].survivors += k;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SweepLevel> inexpressibility_levels(unsigned size_bound) {
  std::vector<LevelCounts> levels(size_bound + 1);
  // Truth-vector bit i covers the valuation v(p) = i & 1, v(q) = i >> 1.
  levels[0].n[class_index(0b1010, 0b1010, kOther)] += 1;  // p
  levels[0].n[class_index(0b1100, 0b1100, kOther)] += 1;  // q
  levels[0].n[class_index(15, 15, kTop)] += 1;            // T
  levels[0].n[class_index(0, 0, kBot)] += 1;              // F

  for (unsigned c = 1; c <= size_bound; ++c) {
    auto& out = levels[c].n;
    for (unsigned s = 0; s < kClasses; ++s) {
      std::uint64_t k = levels[c - 1].n[s];
      if (k == 0) continue;
      unsigned cls = (s >> 8) == kTop ? kBot : kOther;
      out[class_index(~s & 15, (~(s >> 4)) & 15, cls)] += k;
    }
    for (unsigned i = 0; i + 1 <= c; ++i) {
      const auto& lhs = levels[i].n;
      const auto& rhs = levels[c - 1 - i].n;
      for (unsigned ls = 0; ls < kClasses; ++ls) {
        std::uint64_t lk = lhs[ls];
        if (lk == 0) continue;
        for (unsigned rs = 0; rs < kClasses; ++rs) {
          std::uint64_t rk = rhs[rs];
          if (rk == 0) continue;
          add_binary_images(out, ls, rs, lk * rk);
        }
      }
    }
  }
  return tally(levels);
}

namespace {

SweepLevel tally_formulas(const std::vector<Formula>& fs, const Relation& r0,
                          const Relation& none, int jobs) {
  std::uint64_t validated = 0;
  std::uint64_t survivors = 0;
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 128) num_threads(jobs) \
    reduction(+ : validated, survivors)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(fs.size()); ++i) {
      bool by_r0 = relation_validates(r0, fs[i]);
      bool by_none = relation_validates(none, fs[i]);
      validated += by_r0 ? 1 : 0;
      survivors += (by_r0 && !by_none) ? 1 : 0;
    }
    return {fs.size(), validated, survivors};
  }
#else
  (void)jobs;
#endif
  for (const Formula& f : fs) {
    bool by_r0 = relation_validates(r0, f);
    if (!by_r0) continue;
    ++validated;
    if (!relation_validates(none, f)) ++survivors;
  }
  return {fs.size(), validated, survivors};
}

}  // namespace

std::vector<SweepLevel> inexpressibility_reference(unsigned size_bound, int jobs) {
  if (size_bound > 3) {
    throw CapacityError("the literal sweep grows too fast past 3 connectives");
  }
  const std::array<Conn, 6> conns = {Conn::And,    Conn::Or,      Conn::Imp,
                                     Conn::Iff,    Conn::RelImp,  Conn::RelConj};
  std::vector<std::vector<Formula>> levels;
  levels.push_back({p_letter(), q_letter(), Formula::top(), Formula::bottom()});
  for (unsigned c = 1; c <= size_bound; ++c) {
    std::vector<Formula> next;
    for (const Formula& f : levels[c - 1]) next.push_back(Formula::neg(f));
    for (unsigned i = 0; i + 1 <= c; ++i) {
      for (const Formula& l : levels[i]) {
        for (const Formula& r : levels[c - 1 - i]) {
          for (Conn conn : conns) next.push_back(Formula::bin(conn, l, r));
        }
      }
    }
    levels.push_back(std::move(next));
  }

  Relation r0 = Relation::finite({{Formula::top(), Formula::bottom()}});
  Relation none = Relation::empty();
  std::vector<SweepLevel> out;
  out.reserve(levels.size());
  for (const std::vector<Formula>& fs : levels) {
    out.push_back(tally_formulas(fs, r0, none, jobs));
  }
  return out;
}

WitnessReport inexpressibility_sweep(unsigned size_bound) {
  WitnessReport report;
  report.lemma = "no small formula expresses membership of <T, F>";
  Relation r0 = Relation::finite({{Formula::top(), Formula::bottom()}});
  report.objects["relation"] = relation_brief(r0);
  report.objects["atoms"] = "p, q, T, F";

  std::vector<SweepLevel> levels = inexpressibility_levels(size_bound);
  for (std::size_t c = 0; c < levels.size(); ++c) {
    report.checks.push_back({"no expressing candidate with " + std::to_string(c) + " connectives",
                             levels[c].formulas, levels[c].survivors == 0});
  }

  Formula tf = Formula::rel_imp(Formula::top(), Formula::bottom());
  report.checks.push_back({"T ~> F fails on the witness relation itself", 1,
                           !relation_validates(r0, tf)});
  Formula taut = Formula::disj(p_letter(), Formula::neg(p_letter()));
  report.checks.push_back(
      {"p | !p holds under both relations, so the pair-free side eliminates it", 1,
       relation_validates(r0, taut) && relation_validates(Relation::empty(), taut)});
  return report;
}

}  // namespace epstein
