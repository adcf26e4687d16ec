#include <benchmark/benchmark.h>

#include <random>

#include "ud4/characters.hpp"
#include "ud4/classes.hpp"
#include "ud4/cyclotomic.hpp"
#include "ud4/group.hpp"
#include "ud4/table.hpp"

namespace {

using namespace ud4;

UElement random_element(const UGroup& G, std::mt19937_64& rng) {
  std::array<Fq, kNumRoots> t{};
  for (auto& c : t) c = Fq{static_cast<std::uint32_t>(rng() % G.field().q())};
  return G.from_coords(t);
}

void BM_GroupMul(benchmark::State& state) {
  const UGroup G(FieldCtx::make(static_cast<std::uint32_t>(state.range(0)), 1));
  std::mt19937_64 rng(1);
  std::vector<UElement> xs;
  for (int i = 0; i < 256; ++i) xs.push_back(random_element(G, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(G.mul(xs[k & 255], xs[(k + 1) & 255]));
    ++k;
  }
}
BENCHMARK(BM_GroupMul)->Arg(2)->Arg(3)->Arg(7);

void BM_GroupInverse(benchmark::State& state) {
  const UGroup G(FieldCtx::make(5, 1));
  std::mt19937_64 rng(2);
  const UElement x = random_element(G, rng);
  for (auto _ : state) benchmark::DoNotOptimize(G.inv(x));
}
BENCHMARK(BM_GroupInverse);

void BM_CycMul(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  CycInt a(p, std::vector<i128>(CycInt::dim(p), 3));
  const CycInt b = CycInt::zeta_pow(p, 1) + CycInt::integer(p, 2);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
    if (a.coeffs()[0] > (i128(1) << 100)) a = CycInt::one(p);
  }
}
BENCHMARK(BM_CycMul)->Arg(3)->Arg(7);

void BM_GaussSum(benchmark::State& state) {
  const auto F = FieldCtx::make(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_quadratic(FieldElement(F, kOne)));
}
BENCHMARK(BM_GaussSum)->Arg(7)->Arg(101);

// One row of the table against every class representative.
void BM_CharacterRow(benchmark::State& state) {
  const auto F = FieldCtx::make(3, 1);
  const UGroup G(F);
  const auto labels = enumerate_chars(*F);
  const auto reps = enumerate_class_reps(G);
  CharEvaluator ev(G);
  const CharLabel& label = labels.at(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& r : reps) benchmark::DoNotOptimize(ev.value(label, r.rep));
  }
  state.SetLabel(label.family);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * reps.size()));
}
BENCHMARK(BM_CharacterRow)->Arg(0)->Arg(100)->Arg(700);

void BM_BuildTable(benchmark::State& state) {
  const auto F = FieldCtx::make(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(CharTable::build(F));
}
BENCHMARK(BM_BuildTable)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Orthogonality(benchmark::State& state) {
  const CharTable t = CharTable::build(FieldCtx::make(3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_orthogonality(t, OrthoMode::Sampled(1000)));
}
BENCHMARK(BM_Orthogonality)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
