// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "kslogos/frame.hpp"
#include "kslogos/ks_solver.hpp"
#include "kslogos/valuation.hpp"

using namespace kslogos;

namespace {

// Canonical rays with entries in {-r..r}.
Frame integer_frame(std::size_t dim, long r) {
  std::vector<Ray> rays;
  std::vector<long> digits(dim, -r);
  for (;;) {
    std::vector<Scalar> e;
    for (long d : digits) e.emplace_back(d);
    Vector v(std::move(e));
    if (!v.is_zero() && canonical_ray(v) == v) rays.push_back({static_cast<int>(rays.size() + 1), std::nullopt, v});
    std::size_t k = 0;
    while (k < dim && digits[k] == r) digits[k++] = -r;
    if (k == dim) break;
    ++digits[k];
  }
  return Frame(dim, std::move(rays));
}

const Frame& pool40() {
  static const Frame f = integer_frame(4, 1);
  return f;
}

const Frame& pool_large() {
  static const Frame f = integer_frame(4, 2);
  return f;
}

ExecutionPolicy policy(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecutionPolicy::sequential : ExecutionPolicy::parallel;
}

void label(benchmark::State& state, const Frame& f) {
  state.SetLabel(std::string(state.range(0) == 0 ? "serial" : "openmp") + ", " + std::to_string(f.size()) + " rays");
}

void BM_BuildGraph(benchmark::State& state) {
  const Frame& f = pool_large();
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(f, policy(state)));
  label(state, f);
}

void BM_MaximalContexts(benchmark::State& state) {
  const Frame& f = pool_large();
  const Graph g = build_graph(f);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_contexts(g, policy(state)));
  label(state, f);
}

void BM_BornGiv(benchmark::State& state) {
  const Frame& f = pool_large();
  const State rho = DensityOperator::maximally_mixed(4);
  for (auto _ : state) benchmark::DoNotOptimize(born_giv(f, rho, policy(state)));
  label(state, f);
}

void BM_KsSearch(benchmark::State& state) {
  const Frame& f = pool40();
  for (auto _ : state) benchmark::DoNotOptimize(ks_solve(f, {false, policy(state)}));
  label(state, f);
}

}  // namespace

BENCHMARK(BM_BuildGraph)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalContexts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BornGiv)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KsSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
