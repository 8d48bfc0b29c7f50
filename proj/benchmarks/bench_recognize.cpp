#include <benchmark/benchmark.h>

#include "lsug/axioms.hpp"
#include "lsug/recognizer.hpp"

using namespace lsug;

namespace {

// Su of the capacity that is top everywhere except the empty set.
FunctionTable max_sugeno(std::size_t k, std::size_t n) {
  auto l = make_chain(k);
  std::vector<Elem> values(std::size_t{1} << n, l->top());
  values[0] = l->bottom();
  return FunctionTable::of_sugeno(validate_capacity(l, n, values));
}

void run_recognize(benchmark::State& state, RecognitionMethod method) {
  const auto f = max_sugeno(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const auto r = recognize(f, method);
    benchmark::DoNotOptimize(r.capacity);
    pairs = r.pairs_checked;
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}

void BM_RecognizeBoolean(benchmark::State& state) { run_recognize(state, RecognitionMethod::BooleanHomogeneity); }
void BM_RecognizeDirect(benchmark::State& state) { run_recognize(state, RecognitionMethod::DirectComparison); }

void BM_AxiomCheck(benchmark::State& state) {
  const auto f = max_sugeno(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const auto kind = static_cast<AxiomKind>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(axiom_check(f, kind).holds);
  state.SetLabel(std::string(to_string(kind)));
}

void recognizer_args(benchmark::internal::Benchmark* b) {
  for (int k : {3, 6, 11})
    for (int n : {2, 3, 4}) b->Args({k, n});
}

void axiom_args(benchmark::internal::Benchmark* b) {
  for (AxiomKind kind : {AxiomKind::InfHomogeneous, AxiomKind::BooleanInfHomogeneous, AxiomKind::GComonotoneSupremal})
    for (int k : {3, 6}) b->Args({k, 3, static_cast<int>(kind)});
}

}  // namespace

BENCHMARK(BM_RecognizeBoolean)->Apply(recognizer_args);
BENCHMARK(BM_RecognizeDirect)->Apply(recognizer_args);
BENCHMARK(BM_AxiomCheck)->Apply(axiom_args);

BENCHMARK_MAIN();
