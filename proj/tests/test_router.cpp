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

#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/router.hpp"

using namespace swapnet;
using swapnet::testing::preset;

namespace {

ConnectivityGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return {n, e};
}

ConnectivityGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return {n, e};
}

AnnealConfig quick_config(int k, std::uint64_t seed) {
  AnnealConfig cfg;
  cfg.k = k;
  cfg.seed = seed;
  cfg.steps = 600;
  cfg.restarts = 2;
  return cfg;
}

}  // namespace

TEST_CASE("routing cost against hand-computed sums") {
  // Path of 3: the only unvisited pair after init is (0,2) at distance 2.
  CHECK(routing_cost(path(3), init_history(path(3))) == 4);
  // Path of 4: pairs (0,2), (1,3) at distance 2 and (0,3) at distance 3.
  CHECK(routing_cost(path(4), init_history(path(4))) == 17);
  CHECK(routing_cost(path(4), init_history(path(4)), 1) == 7);
  // Complete graph: nothing left to visit.
  CHECK(routing_cost(complete(4), init_history(complete(4))) == 0);
}

TEST_CASE("propose_move keeps layers valid and is seeded") {
  ConnectivityGraph g = path(5);
  AnnealConfig cfg = quick_config(2, 7);
  Rng rng_a(42), rng_b(42);
  SwapBlock block{std::vector<SwapLayer>(2)};
  SwapBlock copy = block;
  for (int i = 0; i < 200; ++i) {
    block = propose_move(block, g, cfg, rng_a);
    copy = propose_move(copy, g, cfg, rng_b);
    for (const auto& layer : block.layers) validate_layer(g, layer);
    REQUIRE(block.layers.size() == 2);
  }
  // Identical seeds walk identical chains.
  for (std::size_t l = 0; l < 2; ++l)
    CHECK(block.layers[l].swaps == copy.layers[l].swaps);
}

TEST_CASE("complete graph routes to an empty protocol") {
  SwapProtocol p = optimize_network(complete(4), quick_config(1, 0));
  CHECK(p.complete);
  CHECK(p.blocks.empty());
  CHECK(p.total_layers() == 0);
  CHECK(verify_protocol(complete(4), p));
}

TEST_CASE("brute force finds the 2-layer path-4 optimum") {
  auto p = brute_force_network(path(4), 1, 6);
  REQUIRE(p.has_value());
  CHECK(p->complete);
  CHECK(p->total_layers() == 2);
  CHECK(verify_protocol(path(4), *p));
}

TEST_CASE("brute force respects the layer budget") {
  CHECK_FALSE(brute_force_network(path(5), 1, 1).has_value());
  CHECK_THROWS(brute_force_network(path(7), 1, 10));
}

TEST_CASE("annealed routing completes and verifies on small graphs") {
  for (int n : {3, 4, 5}) {
    for (int k : {1, 2}) {
      CAPTURE(n);
      CAPTURE(k);
      SwapProtocol p = optimize_network(path(n), quick_config(k, 11));
      CHECK(p.complete);
      CHECK(verify_protocol(path(n), p));
      auto opt = brute_force_network(path(n), k, 20);
      REQUIRE(opt.has_value());
      CHECK(p.total_layers() >= opt->total_layers());
    }
  }
}

TEST_CASE("routing is deterministic per seed") {
  ConnectivityGraph g = load_graph(preset("grid-2x3.graph"));
  AnnealConfig cfg = quick_config(2, 123);
  std::string a = protocol_to_json(optimize_network(g, cfg));
  std::string b = protocol_to_json(optimize_network(g, cfg));
  CHECK(a == b);
  cfg.seed = 124;
  // Not a hard guarantee, but a different seed virtually always differs
  // somewhere in the trace; equality here would hint at a seeding bug.
  std::string c = protocol_to_json(optimize_network(g, cfg));
  CHECK(a != c);
}

TEST_CASE("max_blocks yields a partial protocol") {
  AnnealConfig cfg = quick_config(1, 5);
  cfg.max_blocks = 1;
  SwapProtocol p = optimize_network(path(6), cfg);
  CHECK_FALSE(p.complete);
  CHECK(p.blocks.size() <= 1);
  CHECK(verify_protocol(path(6), p));
}

TEST_CASE("verify_protocol rejects tampered protocols") {
  SwapProtocol p = optimize_network(path(4), quick_config(1, 3));
  REQUIRE(p.complete);
  REQUIRE(!p.blocks.empty());

  SwapProtocol bad = p;
  bad.blocks.front().layers.front().swaps.front() = {0, 2};  // not an edge
  CHECK_FALSE(verify_protocol(path(4), bad));

  SwapProtocol wrong_trace = p;
  wrong_trace.cost_trace.front() += 1;
  CHECK_FALSE(verify_protocol(path(4), wrong_trace));

  SwapProtocol truncated = p;
  truncated.blocks.pop_back();
  truncated.labelling_trace.pop_back();
  truncated.cost_trace.pop_back();
  CHECK_FALSE(verify_protocol(path(4), truncated));  // claims complete
  truncated.complete = false;
  CHECK(verify_protocol(path(4), truncated));
}

TEST_CASE("protocol JSON round-trip") {
  SwapProtocol p = optimize_network(path(5), quick_config(2, 9));
  std::string text = protocol_to_json(p);
  SwapProtocol q = protocol_from_json(text);
  CHECK(protocol_to_json(q) == text);
  CHECK(verify_protocol(path(5), q));
}

TEST_CASE("path-8 swap count stays within the quadratic bound") {
  for (int n : {4, 5, 6, 7, 8}) {
    CAPTURE(n);
    SwapProtocol p = optimize_network(path(n), quick_config(1, 2));
    CHECK(p.complete);
    CHECK(p.total_swaps() <= n * (n - 1) / 2);
  }
}
