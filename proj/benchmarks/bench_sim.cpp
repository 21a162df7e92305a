// Copyright 2026 swapnet contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "swapnet/circuit.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/pauli.hpp"
#include "swapnet/statevector.hpp"

namespace {

swapnet::ConnectivityGraph load_preset(const std::string& name) {
  return swapnet::load_graph(std::string(SWAPNET_PRESET_DIR) + "/" + name);
}

void bm_simulate_hea(benchmark::State& state) {
  auto g = load_preset("grid-3x3.graph");
  auto c = swapnet::build_cry_hea(g, static_cast<int>(state.range(0)));
  std::vector<double> params(c.n_params, 0.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(swapnet::simulate(c, params));
}
BENCHMARK(bm_simulate_hea)->Arg(1)->Arg(4);

void bm_expectation(benchmark::State& state) {
  auto g = load_preset("grid-3x3.graph");
  auto c = swapnet::build_cry_hea(g, 2);
  std::vector<double> params(c.n_params, 0.3);
  auto s = swapnet::simulate(c, params);
  auto hm = swapnet::gen_spin_glass(9, 1).hamiltonian();
  for (auto _ : state)
    benchmark::DoNotOptimize(swapnet::expectation(s, hm));
}
BENCHMARK(bm_expectation);

void bm_simulate_excitation(benchmark::State& state) {
  auto g = load_preset("coarse-6.graph");
  auto c = swapnet::build_excitation_ansatz(g, 1);
  std::vector<double> params(c.n_params, 0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(swapnet::simulate(c, params));
}
BENCHMARK(bm_simulate_excitation);

}  // namespace

BENCHMARK_MAIN();
