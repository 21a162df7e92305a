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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace swapnet {

using Edge = std::pair<int, int>;  // stored with first < second

/// Undirected connectivity graph with a mutable label permutation on top of a
/// fixed topology. Vertices and labels are 0-based internally; the text file
/// format is 1-based.
class ConnectivityGraph {
 public:
  ConnectivityGraph(int n, std::vector<Edge> edges);
  ConnectivityGraph(int n, std::vector<Edge> edges, std::vector<int> labelling);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// labelling()[v] is the label currently sitting on vertex v.
  const std::vector<int>& labelling() const { return labelling_; }
  int label_of(int vertex) const { return labelling_[vertex]; }
  int vertex_of(int label) const { return vertex_of_[label]; }

  bool has_edge(int u, int v) const;
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  int max_degree() const;
  bool connected() const;

  ConnectivityGraph with_labelling(std::vector<int> labelling) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> labelling_;  // vertex -> label
  std::vector<int> vertex_of_;  // label -> vertex
  std::vector<std::vector<int>> adj_;
};

/// One matching of host-graph edges whose labels are exchanged simultaneously.
struct SwapLayer {
  std::vector<Edge> swaps;

  int total_swaps() const { return static_cast<int>(swaps.size()); }
};

/// An ordered stack of at most k swap layers applied between entangling slots.
struct SwapBlock {
  std::vector<SwapLayer> layers;

  int total_swaps() const;
  int nonempty_layers() const;
};

/// Symmetric binary matrix over labels; entry 1 means the label pair has not
/// yet been adjacent. Entries only ever flip 1 -> 0.
class HistoryMatrix {
 public:
  explicit HistoryMatrix(int n);

  int n() const { return n_; }
  bool get(int i, int j) const { return data_[i * n_ + j] != 0; }
  void clear(int i, int j) {
    data_[i * n_ + j] = 0;
    data_[j * n_ + i] = 0;
  }
  void set(int i, int j) {
    data_[i * n_ + j] = 1;
    data_[j * n_ + i] = 1;
  }
  bool all_zero() const;
  int weight() const;  // number of 1-entries over unordered pairs

  bool operator==(const HistoryMatrix&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> data_;
};

void validate_layer(const ConnectivityGraph& g, const SwapLayer& layer);

/// Label-level shortest path distances: d[i][j] is the graph distance between
/// the vertices currently holding labels i and j. Throws on disconnected input.
std::vector<std::vector<int>> all_pairs_distances(const ConnectivityGraph& g);

ConnectivityGraph apply_swap_layer(const ConnectivityGraph& g,
                                   const SwapLayer& layer);
ConnectivityGraph apply_swap_block(const ConnectivityGraph& g,
                                   const SwapBlock& block);

HistoryMatrix init_history(const ConnectivityGraph& g);
HistoryMatrix update_history(const HistoryMatrix& h,
                             const ConnectivityGraph& g);

/// Merge the given disjoint vertex pairs (each an edge of g, together covering
/// all of V) into single coarse nodes. Pair i becomes coarse vertex i with
/// identity labelling.
ConnectivityGraph coarsen(const ConnectivityGraph& g,
                          const std::vector<Edge>& pairs);

/// Text format: "n <count>", then "e <u> <v>" per edge and optional
/// "l <vertex> <label>" overrides, all 1-based. '#' starts a comment.
ConnectivityGraph parse_graph(std::istream& in);
ConnectivityGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const ConnectivityGraph& g);

}  // namespace swapnet
