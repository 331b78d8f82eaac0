#include "epstein/interpolate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <iterator>
#include <utility>

#include "epstein/relation.hpp"
#include "epstein/sample.hpp"
#include "epstein/sat.hpp"
#include "epstein/translate.hpp"

namespace epstein {

namespace {

bool is_constant(const Formula& f) {
  return f == Formula::top() || f == Formula::bottom();
}

std::set<unsigned> side_vars(const std::set<Formula>& side) {
  std::set<unsigned> out;
  for (const Formula& f : side) {
    std::set<unsigned> vs = vars(f);
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

std::set<unsigned> shared_vars(const InterpPair& t) {
  std::set<unsigned> g = side_vars(t.gamma);
  std::set<unsigned> s = side_vars(t.sigma);
  std::set<unsigned> shared;
  std::set_intersection(g.begin(), g.end(), s.begin(), s.end(),
                        std::inserter(shared, shared.begin()));
  return shared;
}

std::vector<Formula> separator_candidates(const InterpPair& t, unsigned depth) {
  std::set<unsigned> shared = shared_vars(t);
  std::set<Formula> pool;
  pool.insert(Formula::top());
  pool.insert(Formula::bottom());

  std::vector<std::vector<Formula>> levels(depth + 1);
  for (unsigned v : shared) levels[0].push_back(Formula::letter(v));
  for (const Formula& f : levels[0]) pool.insert(f);
  static const Conn conns[] = {Conn::And,    Conn::Or,     Conn::Imp,
                               Conn::Iff,    Conn::RelImp, Conn::RelConj};
  for (unsigned k = 1; k <= depth; ++k) {
    for (const Formula& f : levels[k - 1]) {
      levels[k].push_back(Formula::neg(f));
    }
    for (unsigned i = 0; i + 1 <= k; ++i) {
      for (const Formula& l : levels[i]) {
        for (const Formula& r : levels[k - 1 - i]) {
          for (Conn c : conns) levels[k].push_back(Formula::bin(c, l, r));
        }
      }
    }
    for (const Formula& f : levels[k]) pool.insert(f);
  }

  // Relatedness pairs over the shared-variable subformulas of both
  // sides, with their single negations; these are the separator shapes
  // the realisability argument leans on beyond plain letter formulas.
  std::set<Formula> shared_subs;
  auto collect = [&](const std::set<Formula>& side) {
    for (const Formula& f : side) {
      for (const Formula& sub : subformulas(f)) {
        std::set<unsigned> vs = vars(sub);
        bool inside = std::includes(shared.begin(), shared.end(), vs.begin(),
                                    vs.end());
        if (inside) shared_subs.insert(sub);
      }
    }
  };
  collect(t.gamma);
  collect(t.sigma);
  for (const Formula& a : shared_subs) {
    for (const Formula& b : shared_subs) {
      Formula ri = Formula::rel_imp(a, b);
      Formula rc = Formula::rel_conj(a, b);
      pool.insert(ri);
      pool.insert(rc);
      pool.insert(Formula::neg(ri));
      pool.insert(Formula::neg(rc));
    }
  }
  return std::vector<Formula>(pool.begin(), pool.end());
}

}  // namespace

std::optional<Model> realisable(const InterpPair& t) {
  std::vector<CplFormula> parts;
  std::vector<Atom> seen;
  std::set<Atom> seen_set;
  auto note_atoms = [&](const CplFormula& f) {
    for (const Atom& a : atoms(f)) {
      if (seen_set.insert(a).second) seen.push_back(a);
    }
  };
  for (const Formula& f : t.gamma) {
    CplFormula tr = translate(f);
    note_atoms(tr);
    parts.push_back(tr);
  }
  for (const Formula& f : t.sigma) {
    CplFormula tr = translate(f);
    note_atoms(tr);
    parts.push_back(CplFormula::neg(tr));
  }
  std::optional<Assignment> a = sat_conj(parts);
  if (!a) return std::nullopt;
  return model_of(*a, seen);
}

bool separates(const Formula& chi, const InterpPair& t) {
  if (!is_constant(chi)) {
    std::set<unsigned> shared = shared_vars(t);
    std::set<unsigned> cv = vars(chi);
    if (!std::includes(shared.begin(), shared.end(), cv.begin(), cv.end())) {
      return false;
    }
  }
  if (realisable(InterpPair{t.gamma, {chi}})) return false;
  if (realisable(InterpPair{{chi}, t.sigma})) return false;
  return true;
}

std::optional<Formula> find_separator(const InterpPair& t, unsigned depth,
                                      int jobs) {
  std::vector<Formula> candidates = separator_candidates(t, depth);

#ifdef _OPENMP
  if (jobs > 1) {
    std::atomic<std::size_t> best{candidates.size()};
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size());
         ++i) {
      std::size_t index = static_cast<std::size_t>(i);
      if (index >= best.load(std::memory_order_relaxed)) continue;
      if (!separates(candidates[index], t)) continue;
      std::size_t current = best.load(std::memory_order_relaxed);
      while (index < current &&
             !best.compare_exchange_weak(current, index,
                                         std::memory_order_relaxed)) {
      }
    }
    std::size_t hit = best.load();
    if (hit < candidates.size()) return candidates[hit];
    return std::nullopt;
  }
#else
  (void)jobs;
#endif

  for (const Formula& chi : candidates) {
    if (separates(chi, t)) return chi;
  }
  return std::nullopt;
}

SaturationResult saturate(const Formula& phi, const Formula& psi,
                          unsigned depth) {
  InterpPair pair{{phi}, {psi}};
  std::vector<TraceStep> trace;
  bool root_separable = find_separator(pair, depth).has_value();
  trace.push_back({pair, "root", root_separable});

  for (const Formula& sub : proper_subformulas(phi)) {
    InterpPair probe = pair;
    probe.gamma.insert(sub);
    if (find_separator(probe, depth)) {
      pair.gamma.insert(Formula::neg(sub));
      trace.push_back({pair, "gamma-negated", true});
    } else {
      pair = std::move(probe);
      trace.push_back({pair, "gamma", false});
    }
  }
  for (const Formula& sub : proper_subformulas(psi)) {
    InterpPair probe = pair;
    probe.sigma.insert(sub);
    if (find_separator(probe, depth)) {
      pair.sigma.insert(Formula::neg(sub));
      trace.push_back({pair, "sigma-negated", true});
    } else {
      pair = std::move(probe);
      trace.push_back({pair, "sigma", false});
    }
  }
  return SaturationResult{std::move(pair), std::move(trace)};
}

Model model_from_pair(const InterpPair& t) {
  Valuation v(false);
  for (const Formula& f : t.gamma) {
    if (f.is_letter()) v.set(f.letter_index(), true);
  }
  for (const Formula& f : t.sigma) {
    if (f.is_neg()) {
      Formula inner = f.child();
      if (inner.is_letter()) v.set(inner.letter_index(), true);
    }
  }

  std::set<FormulaPair> pairs;
  auto note_rel = [&](const Formula& f) {
    if (f.is_bin(Conn::RelImp) || f.is_bin(Conn::RelConj)) {
      pairs.emplace(f.left(), f.right());
    }
  };
  for (const Formula& f : t.gamma) note_rel(f);
  for (const Formula& f : t.sigma) {
    if (f.is_neg()) note_rel(f.child());
  }
  return Model{std::move(v), Relation::finite(std::move(pairs))};
}

std::optional<InterpolationResult> interpolate(const Formula& phi,
                                               const Formula& psi,
                                               unsigned depth, int jobs) {
  if (!f_valid(Formula::imp(phi, psi))) {
    throw DomainError("the implication is not valid, nothing to interpolate");
  }
  InterpPair root{{phi}, {psi}};
  std::optional<Formula> chi = find_separator(root, depth, jobs);
  std::vector<TraceStep> trace;
  trace.push_back({root, "root", chi.has_value()});
  if (!chi) return std::nullopt;

  std::set<unsigned> shared = shared_vars(root);
  std::set<unsigned> cv = is_constant(*chi) ? std::set<unsigned>{} : vars(*chi);
  InterpolationResult result{
      *chi,
      f_valid(Formula::imp(phi, *chi)),
      f_valid(Formula::imp(*chi, psi)),
      std::includes(shared.begin(), shared.end(), cv.begin(), cv.end()),
      std::move(trace)};
  return result;
}

Model rel_imp_noninterpolation_demo() {
  Model m{Valuation(false), Relation::empty()};
  Sampler sampler(1789);
  for (int round = 0; round < 64; ++round) {
    Formula lhs = sampler.formula(2);
    Formula rhs = sampler.formula(2);
    if (evaluate(m, Formula::rel_imp(lhs, rhs))) {
      throw Error("the empty relation satisfied a relatedness implication");
    }
  }
  return m;
}

}  // namespace epstein
