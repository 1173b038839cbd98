// Serial reference kernels against their OpenMP versions, and the exact
// solver at one thread against all available threads.

#include <benchmark/benchmark.h>

#include <vector>

#include "covnum/exact.hpp"
#include "covnum/kernels.hpp"
#include "covnum/library.hpp"
#include "covnum/structure.hpp"

using namespace covnum;

namespace {

const Group& s6() {
  static const Group g(library::symmetric(6));
  return g;
}

const Group& pgl27() {
  static const Group g(library::by_name("PGL27"));
  return g;
}

// Every conjugate of every maximal subgroup of S6.
const std::vector<ElementSet>& s6_columns() {
  static const std::vector<ElementSet> cols = [] {
    std::vector<ElementSet> out;
    for (const auto& m : maximal_classes(s6()).classes) {
      auto orbit = kernels::subgroup_class_serial(s6(), m.representative.elements);
      out.insert(out.end(), orbit.sets.begin(), orbit.sets.end());
    }
    return out;
  }();
  return cols;
}

void BM_MultiplicationTableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplication_table_serial(s6().store()));
}
void BM_MultiplicationTableOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiplication_table_omp(s6().store()));
}

void BM_ElementOrdersSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::element_orders_serial(s6().store()));
}
void BM_ElementOrdersOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::element_orders_omp(s6().store()));
}

void BM_ClassHistogramsSerial(benchmark::State& state) {
  const auto& cols = s6_columns();
  const auto& cl = s6().classes();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::class_histograms_serial(cols, s6().class_map(), cl.classes.size()));
}
void BM_ClassHistogramsOmp(benchmark::State& state) {
  const auto& cols = s6_columns();
  const auto& cl = s6().classes();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::class_histograms_omp(cols, s6().class_map(), cl.classes.size()));
}

void BM_SubgroupClassSerial(benchmark::State& state) {
  const ElementSet start = maximal_classes(pgl27()).classes.back().representative.elements;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::subgroup_class_serial(pgl27(), start));
}
void BM_SubgroupClassOmp(benchmark::State& state) {
  const ElementSet start = maximal_classes(pgl27()).classes.back().representative.elements;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::subgroup_class_omp(pgl27(), start));
}

// Arg: solver threads, 0 meaning the OpenMP default.
void BM_SolveS6(benchmark::State& state) {
  const MaxClassSet mx = maximal_classes(s6());
  SolveBudget b;
  b.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_exact(s6(), mx, b));
}

void BM_SolvePGL27(benchmark::State& state) {
  const MaxClassSet mx = maximal_classes(pgl27());
  SolveBudget b;
  b.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_exact(pgl27(), mx, b));
}

}  // namespace

BENCHMARK(BM_MultiplicationTableSerial);
BENCHMARK(BM_MultiplicationTableOmp);
BENCHMARK(BM_ElementOrdersSerial);
BENCHMARK(BM_ElementOrdersOmp);
BENCHMARK(BM_ClassHistogramsSerial);
BENCHMARK(BM_ClassHistogramsOmp);
BENCHMARK(BM_SubgroupClassSerial);
BENCHMARK(BM_SubgroupClassOmp);
BENCHMARK(BM_SolveS6)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolvePGL27)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
