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

#include "swapnet/graph.hpp"
#include "swapnet/router.hpp"

namespace {

swapnet::ConnectivityGraph load_preset(const std::string& name) {
  return swapnet::load_graph(std::string(SWAPNET_PRESET_DIR) + "/" + name);
}

void bm_routing_cost(benchmark::State& state) {
  auto g = load_preset("grid-3x3.graph");
  auto h = swapnet::init_history(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(swapnet::routing_cost(g, h));
}
BENCHMARK(bm_routing_cost);

void bm_anneal_block(benchmark::State& state) {
  auto g = load_preset("grid-3x3.graph");
  auto h = swapnet::init_history(g);
  swapnet::AnnealConfig cfg;
  cfg.k = static_cast<int>(state.range(0));
  cfg.steps = 500;
  cfg.restarts = 1;
  cfg.seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(swapnet::anneal_block(g, h, cfg));
}
BENCHMARK(bm_anneal_block)->Arg(1)->Arg(2);

void bm_optimize_network(benchmark::State& state) {
  auto g = load_preset("linear-7.graph");
  swapnet::AnnealConfig cfg;
  cfg.k = 2;
  cfg.steps = 500;
  cfg.restarts = 2;
  cfg.seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(swapnet::optimize_network(g, cfg));
}
BENCHMARK(bm_optimize_network);

}  // namespace
