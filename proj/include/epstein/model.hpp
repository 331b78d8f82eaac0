#pragma once

#include <map>

#include "epstein/formula.hpp"
#include "epstein/relation.hpp"

namespace epstein {

// Total boolean valuation of letters: default value plus finitely many
// exceptions, normalized so equal functions compare equal.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(bool default_value) : default_(default_value) {}

  bool value(unsigned letter) const {
    auto it = except_.find(letter);
    return it == except_.end() ? default_ : it->second;
  }
  void set(unsigned letter, bool v) {
    if (v == default_) {
      except_.erase(letter);
    } else {
      except_[letter] = v;
    }
  }
  bool default_value() const { return default_; }
  const std::map<unsigned, bool>& exceptions() const { return except_; }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.default_ == b.default_ && a.except_ == b.except_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

 private:
  bool default_ = false;
  std::map<unsigned, bool> except_;
};

struct Model {
  Valuation valuation;
  Relation relation;
};

// Truth in a model. Classical connectives behave classically; f ~> g holds
// when f -> g holds and <f, g> is related; f ^ g holds when both conjuncts
// hold and <f, g> is related. The related pair is always the pair of
// untranslated operand formulas themselves.
bool evaluate(const Model& m, const Formula& f);

bool models_all(const Model& m, const std::vector<Formula>& fs);

struct ValidatesOptions {
  unsigned max_letters = 20;
  int jobs = 1;
};

// Whether every valuation (over the letters of f, others fixed false) makes
// f true in <v, r>. Sweeps all 2^n valuations; n beyond max_letters raises
// CapacityError. jobs > 1 splits the sweep across OpenMP threads; the result
// is identical to the serial path.
bool relation_validates(const Relation& r, const Formula& f, const ValidatesOptions& opts = {});

}  // namespace epstein
