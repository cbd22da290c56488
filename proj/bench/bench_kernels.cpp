// OpenMP kernels against their serial references on the same inputs.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rbmtopo/kernels.hpp"
#include "rbmtopo/models.hpp"
#include "rbmtopo/rbm.hpp"

namespace {

using namespace rbmtopo;

RbmNetwork dense_random_net(int n, int m) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 0.3);
  std::vector<HiddenUnit> hidden;
  for (int j = 0; j < m; ++j) {
    HiddenUnit u;
    u.bias = {g(rng), g(rng)};
    for (int k = 0; k < n; ++k) u.weights.push_back({k, {g(rng), g(rng)}});
    hidden.push_back(std::move(u));
  }
  std::vector<Complex> biases(static_cast<std::size_t>(n));
  for (auto& a : biases) a = {g(rng), g(rng)};
  return RbmNetwork(n, std::move(biases), std::move(hidden), {0.0, 0.0});
}

template <bool Parallel>
void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RbmNetwork net = dense_random_net(n, n);
  std::vector<Complex> out(std::size_t{1} << n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::enumerate_amplitudes(net, out, kDefaultZeroThreshold);
    } else {
      kernels::serial::enumerate_amplitudes(net, out, kDefaultZeroThreshold);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <bool Parallel>
void BM_EnumerateHaah(benchmark::State& state) {
  const RbmNetwork net = haah_code(2).rbm;
  std::vector<Complex> out(std::size_t{1} << net.n_visible());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::enumerate_amplitudes(net, out, kDefaultZeroThreshold);
    } else {
      kernels::serial::enumerate_amplitudes(net, out, kDefaultZeroThreshold);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <bool Parallel>
void BM_GateLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Complex> psi(std::size_t{1} << n, Complex(1.0, 0.0));
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) {
      if constexpr (Parallel) {
        kernels::apply_h(psi, n, q);
        kernels::apply_s(psi, n, q);
      } else {
        kernels::serial::apply_h(psi, n, q);
        kernels::serial::apply_s(psi, n, q);
      }
    }
    benchmark::DoNotOptimize(psi.data());
  }
}

template <bool Parallel>
void BM_Projector(benchmark::State& state) {
  const auto gens = haah_generators(2);
  const int n = gens.front().size();
  std::vector<Complex> psi(std::size_t{1} << n);
  for (auto _ : state) {
    std::fill(psi.begin(), psi.end(), Complex(0.0, 0.0));
    psi[0] = 1.0;
    for (const auto& g : gens) {
      if constexpr (Parallel) {
        kernels::apply_pauli_projector(psi, g.x_mask(), g.z_mask(), g.phase());
      } else {
        kernels::serial::apply_pauli_projector(psi, g.x_mask(), g.z_mask(), g.phase());
      }
    }
    benchmark::DoNotOptimize(psi.data());
  }
}

BENCHMARK(BM_Enumerate<false>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate<true>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateHaah<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateHaah<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GateLayer<false>)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GateLayer<true>)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Projector<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Projector<true>)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
