// Microbenchmarks for the enumeration kernels: these dominate the runtime
// of every desk-scale verification, so regressions here matter.

#include <benchmark/benchmark.h>

#include <memory>

#include "quiverhall/hall.hpp"
#include "quiverhall/lusztig.hpp"
#include "quiverhall/rep_enum.hpp"

using namespace qh;

namespace {

QuiverPtr chain(int n) {
  std::vector<std::string> verts;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    arrows.emplace_back("a" + std::to_string(i), std::to_string(i),
                        std::to_string(i + 1));
  return std::make_shared<const Quiver>(verts, arrows);
}

QuiverPtr doubled_edge() {
  return std::make_shared<const Quiver>(
      std::vector<std::string>{"1", "2"},
      std::vector<std::tuple<std::string, std::string, std::string>>{
          {"a", "1", "2"}, {"b", "1", "2"}});
}

void BM_PathEnumeration(benchmark::State& state) {
  QuiverPtr q = chain(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_paths(*q, q->arrow_count()));
}
BENCHMARK(BM_PathEnumeration)->Arg(6)->Arg(10)->Arg(14);

void BM_IsoClassTable(benchmark::State& state) {
  QuiverPtr q = doubled_edge();
  std::int64_t p = state.range(0);
  for (auto _ : state) {
    IsoClassTable table =
        enumerate_iso_classes(q, DimVector({2, 2}), p, EnumOptions{1 << 24});
    benchmark::DoNotOptimize(table.class_count());
  }
}
BENCHMARK(BM_IsoClassTable)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HallProduct(benchmark::State& state) {
  QuiverPtr q = chain(2);
  HallAlgebra hall(q, state.range(0));
  hall.composition_monomial({0, 1});  // warm the class cache
  for (auto _ : state) {
    HallElement e = hall.composition_monomial({0, 1, 0, 1});
    benchmark::DoNotOptimize(e.terms.size());
  }
}
BENCHMARK(BM_HallProduct)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SerreResidual(benchmark::State& state) {
  QuiverPtr q = chain(2);
  for (auto _ : state) {
    HallAlgebra hall(q, state.range(0));
    benchmark::DoNotOptimize(hall.serre_check(0, 1).holds);
  }
}
BENCHMARK(BM_SerreResidual)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_LambdaScan(benchmark::State& state) {
  auto dq = std::make_shared<const DoubleQuiver>(double_quiver(chain(2)));
  LambdaOptions opts;
  opts.point_budget = 1 << 24;
  for (auto _ : state) {
    LambdaSet set = lambda_points(dq, DimVector({2, 2}), state.range(0), opts);
    benchmark::DoNotOptimize(set.count());
  }
}
BENCHMARK(BM_LambdaScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
