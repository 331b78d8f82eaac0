#pragma once

#include <cstdint>
#include <random>
#include <set>

#include "epstein/model.hpp"

namespace epstein {

// Seeded generator for formulas, valuations, relations and models. Every
// draw goes through next(), so identical seeds reproduce identical streams
// on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return rng_() % bound; }
  bool coin() { return (rng_() & 1) != 0; }

  // Formula of nesting depth at most `depth` over letters 1..letters.
  Formula formula(unsigned depth, unsigned letters = 4);
  // Same shape but classical connectives only.
  Formula classical_formula(unsigned depth, unsigned letters = 4);

  Substitution substitution(const std::set<unsigned>& vars, unsigned depth,
                            unsigned letters = 4);

  Valuation valuation(unsigned letters = 4);

  Relation finite_relation(unsigned max_pairs, unsigned depth = 2, unsigned letters = 4);
  Relation symmetric_relation(unsigned max_pairs, unsigned depth = 2, unsigned letters = 4);
  Relation n_closed_relation(unsigned max_pairs, unsigned depth = 2, unsigned letters = 4);
  Relation sn_closed_relation(unsigned max_pairs, unsigned depth = 2, unsigned letters = 4);

  // Any representation kind, including cofinite, tower and override.
  Relation relation(unsigned depth = 2, unsigned letters = 4);

  Model model(unsigned depth = 2, unsigned letters = 4);

 private:
  std::set<FormulaPair> pair_set(unsigned max_pairs, unsigned depth, unsigned letters);

  std::mt19937_64 rng_;
};

}  // namespace epstein
