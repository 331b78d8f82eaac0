#include "epstein/model.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace epstein {

bool evaluate(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Letter:
      return m.valuation.value(f.letter_index());
    case Formula::Kind::Neg:
      return !evaluate(m, f.child());
    case Formula::Kind::Bin: {
      switch (f.conn()) {
        case Conn::And: return evaluate(m, f.left()) && evaluate(m, f.right());
        case Conn::Or: return evaluate(m, f.left()) || evaluate(m, f.right());
        case Conn::Imp: return !evaluate(m, f.left()) || evaluate(m, f.right());
        case Conn::Iff: return evaluate(m, f.left()) == evaluate(m, f.right());
        case Conn::RelImp:
          return (!evaluate(m, f.left()) || evaluate(m, f.right())) &&
                 m.relation.contains(f.left(), f.right());
        case Conn::RelConj:
          return evaluate(m, f.left()) && evaluate(m, f.right()) &&
                 m.relation.contains(f.left(), f.right());
      }
    }
  }
  throw Error("unreachable");
}

bool models_all(const Model& m, const std::vector<Formula>& fs) {
  for (const auto& f : fs) {
    if (!evaluate(m, f)) return false;
  }
  return true;
}

namespace {

Valuation valuation_for_mask(const std::vector<unsigned>& letters, std::uint64_t mask) {
  Valuation v(false);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) v.set(letters[i], true);
  }
  return v;
}

}  // namespace

bool relation_validates(const Relation& r, const Formula& f, const ValidatesOptions& opts) {
  std::set<unsigned> vs = vars(f);
  if (vs.size() > opts.max_letters) {
    throw CapacityError("formula mentions " + std::to_string(vs.size()) +
                        " letters; valuation sweep capped at " +
                        std::to_string(opts.max_letters));
  }
  std::vector<unsigned> letters(vs.begin(), vs.end());
  const std::uint64_t total = std::uint64_t{1} << letters.size();

#ifdef _OPENMP
  if (opts.jobs > 1) {
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static) num_threads(opts.jobs)
    for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
      if (failed.load(std::memory_order_relaxed)) continue;
      Model m{valuation_for_mask(letters, static_cast<std::uint64_t>(mask)), r};
      if (!evaluate(m, f)) failed.store(true, std::memory_order_relaxed);
    }
    return !failed.load();
  }
#endif

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Model m{valuation_for_mask(letters, mask), r};
    if (!evaluate(m, f)) return false;
  }
  return true;
}

}  // namespace epstein
