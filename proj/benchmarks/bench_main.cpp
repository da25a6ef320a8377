#include <benchmark/benchmark.h>

#include "symchar/hash.hpp"
#include "symchar/inner.hpp"
#include "symchar/schur.hpp"

using namespace symchar;

namespace {

Partition staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i > 0; --i) parts.push_back(i);
  return Partition(parts);
}

// Cold Littlewood-Richardson product of two staircases.
void BM_OuterMulCold(benchmark::State& state) {
  const Partition p = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    clear_schur_caches();
    benchmark::DoNotOptimize(outer_mul_basis(p, p).size());
  }
}
BENCHMARK(BM_OuterMulCold)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterTable t(n);
    benchmark::DoNotOptimize(t.labels().size());
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

// Kronecker product s_mu * s_mu; after the first iteration this is the memo lookup.
void BM_InnerMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& labels = character_table(n).labels();
  const SymFunc f = s(labels[labels.size() / 2]);
  for (auto _ : state) benchmark::DoNotOptimize(inner_mul(f, f).size());
}
BENCHMARK(BM_InnerMul)->DenseRange(4, 10, 2);

// Fresh hash product per iteration so the basis memo starts empty.
void BM_HashCold(benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  const Partition p = staircase(k);
  const HashSpec spec = named_hash_spec(state.range(0) == 0 ? "thibon" : "newell-littlewood");
  for (auto _ : state) {
    HashProduct h(spec);
    benchmark::DoNotOptimize(h.basis(p, p).size());
  }
}
BENCHMARK(BM_HashCold)->ArgsProduct({{0, 1}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
