#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "spinc/cohomology.hpp"
#include "spinc/cohomology_ops.hpp"
#include "spinc/complex_ops.hpp"
#include "spinc/io.hpp"
#include "spinc/smith.hpp"
#include "spinc/structures.hpp"

using namespace spinc;

namespace {

ComplexPtr load(const std::string& stem) {
  return share(read_complex(std::string(SPINC_CORPUS_DIR) + "/" + stem + ".scx"));
}

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_SmithDense(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithDense)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

void BM_SmithBoundary(benchmark::State& state) {
  const auto k = load("cp2");
  const IntMatrix d = boundary_matrix(*k, 3);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d));
}
BENCHMARK(BM_SmithBoundary)->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state, const char* stem, Ring ring) {
  const auto k = load(stem);
  for (auto _ : state) benchmark::DoNotOptimize(Cohomology::compute(Space(k), ring));
}
BENCHMARK_CAPTURE(BM_Cohomology, cp2_Z, "cp2", Ring::Z)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, rp3xs1_Z, "rp3xs1", Ring::Z)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, t4_Z, "t4", Ring::Z)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cohomology, t4_Z2, "t4", Ring::Z2)->Unit(benchmark::kMillisecond);

void BM_WuAndTorsors(benchmark::State& state) {
  const auto k = load("rp3xs1");
  for (auto _ : state) {
    const Space x(k);
    const auto h2m = cohomology(x, 2, Ring::Z2);
    const auto w2 = wu_class_w2(h2m, fundamental_cycle(*k, 4));
    const auto t = spinc_torsor(cohomology(x, 2, Ring::Z), cohomology(x, 3, Ring::Z), w2);
    benchmark::DoNotOptimize(enumerate(t));
  }
}
BENCHMARK(BM_WuAndTorsors)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
