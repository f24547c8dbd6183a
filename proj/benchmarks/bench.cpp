#include <benchmark/benchmark.h>

#include <random>

#include "clonelogic/generators.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "clonelogic/semantics.hpp"

using namespace clonelogic;

namespace {

Language language() {
  Language l;
  l.functions.declare("f", 1);
  l.functions.declare("g", 2);
  l.predicates.declare("P", 1);
  l.predicates.declare("R", 2);
  l.predicates.declare("e", 2);
  l.predicates.set_equality("e");
  return l;
}

const RandomShape kShape{.max_var = 4, .term_depth = 3, .formula_depth = 4, .max_prefix = 4};

void BM_Compose(benchmark::State& state) {
  const Language l = language();
  std::mt19937_64 rng(1);
  std::vector<Substitution> subs;
  for (int k = 0; k < 64; ++k) subs.push_back(random_substitution(l.functions, rng, kShape));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(subs[k % 64], subs[(k + 1) % 64]));
    ++k;
  }
}
BENCHMARK(BM_Compose);

void BM_Fsubst(benchmark::State& state) {
  const Language l = language();
  std::mt19937_64 rng(2);
  std::vector<Formula> formulas;
  std::vector<Substitution> subs;
  for (int k = 0; k < 64; ++k) {
    formulas.push_back(random_formula(l, rng, kShape));
    subs.push_back(random_substitution(l.functions, rng, kShape));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fsubst(formulas[k % 64], subs[(k + 7) % 64]));
    ++k;
  }
}
BENCHMARK(BM_Fsubst);

void BM_IsValid(benchmark::State& state) {
  const Language l = language();
  std::mt19937_64 rng(3);
  const auto size = static_cast<std::size_t>(state.range(0));
  const Structure d = random_structure(l, size, 1, rng);
  std::vector<Formula> formulas;
  for (int k = 0; k < 32; ++k) formulas.push_back(random_formula(l, rng, kShape));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_valid(d, formulas[k % 32]));
    ++k;
  }
}
BENCHMARK(BM_IsValid)->Arg(2)->Arg(3)->Arg(5);

void BM_Countermodel(benchmark::State& state) {
  Language l;
  l.functions.declare("f", 1);
  l.predicates.declare("r", 1);
  l.predicates.declare("e", 2);
  l.predicates.set_equality("e");
  // Valid, so every structure up to size 3 is visited.
  const Formula p = imp(Formula::forall(Formula::atom("r", {Term::var(1)})),
                        Formula::atom("r", {Term::app("f", {Term::var(1)})}));
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(countermodel_search(l, p, 3, {.cell_cap = 16, .threads = threads}));
}
BENCHMARK(BM_Countermodel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateFilters(benchmark::State& state) {
  const FinitePropAlgebra a = FinitePropAlgebra::free_boolean(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_filters(a));
}
BENCHMARK(BM_EnumerateFilters)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
