#include <benchmark/benchmark.h>

#include "epstein/interpolate.hpp"
#include "epstein/model.hpp"
#include "epstein/parse.hpp"
#include "epstein/witness.hpp"

namespace {

using namespace epstein;

// Conjunction of instances of (p ~> q) -> (p -> q) along a letter chain;
// valid under every relation, so the valuation sweep never exits early.
Formula a1_chain(unsigned letters) {
  Formula acc = Formula::letter(1);
  for (unsigned i = 1; i + 1 <= letters; ++i) {
    Formula l = Formula::letter(i);
    Formula r = Formula::letter(i + 1);
    Formula inst = Formula::imp(Formula::rel_imp(l, r), Formula::imp(l, r));
    acc = i == 1 ? inst : Formula::conj(std::move(acc), std::move(inst));
  }
  return acc;
}

void bm_validate(benchmark::State& state) {
  Formula f = a1_chain(16);
  Relation r = Relation::full();
  ValidatesOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    bool ok = relation_validates(r, f, opts);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(bm_validate)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_sweep_reference(benchmark::State& state) {
  for (auto _ : state) {
    auto levels = inexpressibility_reference(2, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(levels);
  }
}
BENCHMARK(bm_sweep_reference)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_sweep_classes(benchmark::State& state) {
  for (auto _ : state) {
    auto levels = inexpressibility_levels(5);
    benchmark::DoNotOptimize(levels);
  }
}
BENCHMARK(bm_sweep_classes)->Unit(benchmark::kMillisecond);

void bm_separator(benchmark::State& state) {
  InterpPair t;
  t.gamma = {parse("(p & q) | (r & s)")};
  t.sigma = {parse("(p | r) | t")};
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto chi = find_separator(t, 3, jobs);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(bm_separator)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
