#include <benchmark/benchmark.h>

#include "compactum/geometry.hpp"
#include "compactum/io.hpp"
#include "compactum/slice.hpp"
#include "compactum/verify.hpp"

using namespace compactum;

namespace {

GroupPtr group_for(int which) {
  switch (which) {
    case 0: return make_group({GroupKind::Cyclic, 6, {}, {}});
    case 1: return make_group({GroupKind::Dihedral, 4, {}, {}});
    default: return make_group({GroupKind::Integers, 1, {}, {}});
  }
}

void BM_RelationStream(benchmark::State& state) {
  const GroupPtr g = group_for(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    RelationStream stream(g);
    stream.run_until(static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(stream.relations().size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RelationStream)->ArgsProduct({{1'000, 10'000}, {0, 1, 2}});

void BM_VerifyFiniteIso(benchmark::State& state) {
  const GroupPtr g = group_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_finite_iso(g).verdict);
}
BENCHMARK(BM_VerifyFiniteIso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ComputeM(benchmark::State& state) {
  const GroupPtr g = group_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_m(g, 200).horizon);
}
BENCHMARK(BM_ComputeM)->Arg(0)->Arg(2);

void BM_BuildK(benchmark::State& state) {
  const GroupPtr g = group_for(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_K(g, static_cast<std::uint64_t>(state.range(0))).size());
}
BENCHMARK(BM_BuildK)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SliceK(benchmark::State& state) {
  const Scene4 k = build_K(group_for(0), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(slice_scene(k, {Axis::X3, q(1, 2)}, {Axis::X4, q(7, 8)}).items.size());
  }
}
BENCHMARK(BM_SliceK)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SceneJsonRoundTrip(benchmark::State& state) {
  const Scene4 k = build_K(group_for(0), 100);
  for (auto _ : state) benchmark::DoNotOptimize(parse_scene(scene_json(k)).size());
}
BENCHMARK(BM_SceneJsonRoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
