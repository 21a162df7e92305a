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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swapnet/graph.hpp"
#include "swapnet/rng.hpp"

namespace swapnet {

struct AnnealConfig {
  int k = 2;                 // max swap depth per block
  int steps = 0;             // 0 -> default 2000 * k
  double t0 = 0.0;           // 0 -> probe-estimated initial temperature
  double alpha = 0.995;      // geometric cooling factor
  double p_add = 0.5;        // probability of the add-edge move
  int restarts = 4;          // independent chains per block
  std::uint64_t seed = 0;
  std::optional<int> max_blocks;  // cap for partial networks
  int dist_exponent = 2;     // distance penalty exponent in the cost

  int effective_steps() const { return steps > 0 ? steps : 2000 * k; }
  void validate() const;
};

/// Optimized swap network: ordered blocks plus the labelling and cost after
/// each accepted block. `complete` means the history matrix reached all-zero.
struct SwapProtocol {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<SwapBlock> blocks;
  std::vector<std::vector<int>> labelling_trace;
  std::vector<long long> cost_trace;
  bool complete = false;

  int total_layers() const;
  int total_swaps() const;

  /// Composition of all blocks as a label permutation: the labelling reached
  /// from `initial` after replaying every block.
  std::vector<int> final_labelling(const std::vector<int>& initial) const;
};

/// Eq-style routing cost: sum over unordered label pairs of
/// H_ij * d_ij^exponent with label-level shortest-path distances.
long long routing_cost(const ConnectivityGraph& g, const HistoryMatrix& h,
                       int dist_exponent = 2);

/// One annealing move: pick a uniform layer; with probability p_add insert a
/// uniformly chosen compatible edge, otherwise remove a uniformly chosen swap.
/// Falls back to removal when no edge can be added without breaking the
/// matching, and to insertion when the layer is empty.
SwapBlock propose_move(const SwapBlock& block, const ConnectivityGraph& g,
                       const AnnealConfig& cfg, Rng& rng);

struct AnnealResult {
  SwapBlock block;
  ConnectivityGraph graph;
  HistoryMatrix history;
  long long cost;
};

/// Metropolis annealing of one depth-<=k block over `restarts` chains; returns
/// the best block seen (the empty block is always a candidate).
AnnealResult anneal_block(const ConnectivityGraph& g, const HistoryMatrix& h,
                          const AnnealConfig& cfg);

/// Outer loop: anneal blocks until the history is all-zero or max_blocks is
/// reached. Trailing empty layers inside blocks are pruned.
SwapProtocol optimize_network(const ConnectivityGraph& g,
                              const AnnealConfig& cfg);

/// Exhaustive minimum-total-layer complete protocol (test oracle). Searches
/// sequences of matchings grouped into depth-<=k blocks, history updated at
/// block boundaries. Returns nullopt when no complete protocol exists within
/// max_layers. Requires n <= 6.
std::optional<SwapProtocol> brute_force_network(const ConnectivityGraph& g,
                                                int k, int max_layers);

/// Replays the protocol from g, updating history at block boundaries; true iff
/// the trace matches and (for complete protocols) the history ends all-zero.
bool verify_protocol(const ConnectivityGraph& g, const SwapProtocol& p,
                     int dist_exponent = 2);

std::string protocol_to_json(const SwapProtocol& p);
SwapProtocol protocol_from_json(const std::string& text);

}  // namespace swapnet
