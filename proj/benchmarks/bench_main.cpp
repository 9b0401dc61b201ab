#include <benchmark/benchmark.h>

#include "orbi/covers.hpp"
#include "orbi/enumerate.hpp"
#include "orbi/groups.hpp"
#include "orbi/hitchin.hpp"
#include "orbi/riemann_roch.hpp"

namespace {

orbi::EnumerationBounds sphere_family(int max_order) {
  orbi::EnumerationBounds b;
  b.cone_points = {3, 4};
  b.max_order = max_order;
  b.orientability = orbi::OrientabilityFilter::orientable_only;
  return b;
}

void BM_EnumerateSignatures(benchmark::State& state) {
  const auto bounds = sphere_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::int64_t count = 0;
    orbi::SignatureStream stream(bounds);
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
    state.counters["signatures"] = static_cast<double>(count);
  }
}
BENCHMARK(BM_EnumerateSignatures)->Arg(12)->Arg(24);

void BM_HitchinOverFamily(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto signatures = orbi::enumerate_signatures(sphere_family(12));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& s : signatures) {
      if (orbi::is_hyperbolic(s)) total += orbi::hitchin_dimension_pgl(s, n);
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(signatures.size()));
}
BENCHMARK(BM_HitchinOverFamily)->Arg(3)->Arg(8);

void BM_RigidSweep(benchmark::State& state) {
  orbi::EnumerationBounds b;
  b.cone_points = {3, 3};
  b.max_order = static_cast<int>(state.range(0));
  b.orientability = orbi::OrientabilityFilter::orientable_only;
  for (auto _ : state) benchmark::DoNotOptimize(orbi::enumerate_rigid(4, b));
}
BENCHMARK(BM_RigidSweep)->Arg(100);

void BM_CanonicalPowerH0(benchmark::State& state) {
  const orbi::OrbiCurve curve(2, {2, 3, 7, 11});
  for (auto _ : state) {
    std::int64_t sum = 0;
    for (int d = 2; d <= 8; ++d) sum += orbi::h0_canonical_power(curve, d);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_CanonicalPowerH0);

void BM_KleinActionValidation(benchmark::State& state) {
  const auto base = orbi::sphere({2, 3, 7});
  const auto action = orbi::klein_quartic_action();
  for (auto _ : state) {
    const auto checked = orbi::validate_action(base, action);
    benchmark::DoNotOptimize(orbi::lift_signature(checked));
  }
}
BENCHMARK(BM_KleinActionValidation)->Unit(benchmark::kMillisecond);

void BM_FlatteningCheck(benchmark::State& state) {
  for (auto _ : state) {
    bool all = true;
    for (int p = 2; p <= 20; ++p)
      for (int q = 2; q <= 20; ++q) all = all && orbi::flattening_morphism_check(p, q, 20);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_FlatteningCheck);

}  // namespace

BENCHMARK_MAIN();
