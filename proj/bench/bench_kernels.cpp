// Serial vs OpenMP for the hot kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "pinet/general_basis.hpp"
#include "pinet/map_network.hpp"
#include "pinet/oracle.hpp"
#include "pinet/synth.hpp"

using namespace pinet;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

MapNetwork noisy_network(std::size_t n, double p, std::size_t m) {
  std::mt19937_64 rng(17);
  auto g = sample_weakly_connected(n, p, 1000, rng);
  MapNetwork net(g, m);
  std::vector<Matrix> x;
  for (std::size_t e = 0; e < g.edge_count(); ++e) x.push_back(random_orthogonal(m, rng));
  net.set_inputs(x);
  return net;
}

void BM_objective(benchmark::State& state) {
  const auto net = noisy_network(40, 0.15, 10);
  const auto basis = path_invariance_basis(net.graph());
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_objective(net, basis, 1.0, mode(state)).value);
  }
  state.counters["pairs"] = static_cast<double>(basis.size());
}

void BM_all_pairs_deviation(benchmark::State& state) {
  const auto net = noisy_network(10, 0.3, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_pairs_deviation(net, 4, mode(state)).max_deviation);
  }
}

void BM_closure_signatures(benchmark::State& state) {
  std::mt19937_64 rng(5);
  auto g = sample_weakly_connected(7, 0.3, 1000, rng);
  PathClosure closure(g, 9, 5'000'000);
  for (const auto& entry : path_invariance_basis(g)) closure.add_pair(entry.pair);
  closure.saturate();
  std::vector<std::uint64_t> right, left;
  for (auto _ : state) {
    closure.signatures(mode(state), right, left);
    benchmark::DoNotOptimize(right.data());
  }
  state.counters["walks"] = static_cast<double>(right.size());
}

void BM_basis(benchmark::State& state) {
  std::mt19937_64 rng(9);
  auto g = sample_weakly_connected(60, 0.08, 1000, rng);
  for (auto _ : state) benchmark::DoNotOptimize(path_invariance_basis(g, mode(state)).size());
}

}  // namespace

BENCHMARK(BM_objective)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_all_pairs_deviation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_signatures)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_basis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
