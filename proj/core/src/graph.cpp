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

#include "swapnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace swapnet {

namespace {

std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges) {
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
  std::vector<Edge> out(seen.begin(), seen.end());
  return out;
}

}  // namespace

ConnectivityGraph::ConnectivityGraph(int n, std::vector<Edge> edges)
    : ConnectivityGraph(n, std::move(edges), [n] {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return id;
      }()) {}

ConnectivityGraph::ConnectivityGraph(int n, std::vector<Edge> edges,
                                     std::vector<int> labelling)
    : n_(n),
      edges_(normalize_edges(n, std::move(edges))),
      labelling_(std::move(labelling)) {
  if (n_ < 1) throw std::invalid_argument("graph: need at least one vertex");
  if (static_cast<int>(labelling_.size()) != n_)
    throw std::invalid_argument("graph: labelling size mismatch");
  vertex_of_.assign(n_, -1);
  for (int v = 0; v < n_; ++v) {
    int l = labelling_[v];
    if (l < 0 || l >= n_ || vertex_of_[l] != -1)
      throw std::invalid_argument("graph: labelling is not a permutation");
    vertex_of_[l] = v;
  }
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

bool ConnectivityGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int ConnectivityGraph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool ConnectivityGraph::connected() const {
  std::vector<char> seen(n_, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push_back(v);
      }
  }
  return count == n_;
}

ConnectivityGraph ConnectivityGraph::with_labelling(
    std::vector<int> labelling) const {
  return ConnectivityGraph(n_, edges_, std::move(labelling));
}

int SwapBlock::total_swaps() const {
  int t = 0;
  for (const auto& l : layers) t += l.total_swaps();
  return t;
}

int SwapBlock::nonempty_layers() const {
  int t = 0;
  for (const auto& l : layers) t += l.swaps.empty() ? 0 : 1;
  return t;
}

HistoryMatrix::HistoryMatrix(int n) : n_(n), data_(n * n, 0) {}

bool HistoryMatrix::all_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint8_t x) { return x == 0; });
}

int HistoryMatrix::weight() const {
  int w = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) w += get(i, j) ? 1 : 0;
  return w;
}

void validate_layer(const ConnectivityGraph& g, const SwapLayer& layer) {
  std::vector<char> used(g.n(), 0);
  for (auto [u, v] : layer.swaps) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("swap layer: pair is not an edge");
    if (used[u] || used[v])
      throw std::invalid_argument("swap layer: vertex appears in two swaps");
    used[u] = used[v] = 1;
  }
}

std::vector<std::vector<int>> all_pairs_distances(const ConnectivityGraph& g) {
  if (!g.connected()) throw std::runtime_error("graph not connected");
  int n = g.n();
  // BFS from every vertex, then reindex vertices to labels.
  std::vector<std::vector<int>> vdist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& d = vdist[s];
    d[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.adjacency()[u])
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          q.push_back(v);
        }
    }
  }
  std::vector<std::vector<int>> d(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d[i][j] = vdist[g.vertex_of(i)][g.vertex_of(j)];
  return d;
}

ConnectivityGraph apply_swap_layer(const ConnectivityGraph& g,
                                   const SwapLayer& layer) {
  validate_layer(g, layer);
  std::vector<int> labelling = g.labelling();
  for (auto [u, v] : layer.swaps) std::swap(labelling[u], labelling[v]);
  return g.with_labelling(std::move(labelling));
}

ConnectivityGraph apply_swap_block(const ConnectivityGraph& g,
                                   const SwapBlock& block) {
  ConnectivityGraph out = g;
  for (const auto& layer : block.layers) out = apply_swap_layer(out, layer);
  return out;
}

HistoryMatrix init_history(const ConnectivityGraph& g) {
  HistoryMatrix h(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) h.set(i, j);
  return update_history(h, g);
}

HistoryMatrix update_history(const HistoryMatrix& h,
                             const ConnectivityGraph& g) {
  if (h.n() != g.n())
    throw std::invalid_argument("history/graph dimension mismatch");
  HistoryMatrix out = h;
  for (auto [u, v] : g.edges()) out.clear(g.label_of(u), g.label_of(v));
  return out;
}

ConnectivityGraph coarsen(const ConnectivityGraph& g,
                          const std::vector<Edge>& pairs) {
  int n = g.n();
  if (static_cast<int>(pairs.size()) * 2 != n)
    throw std::invalid_argument("coarsen: pairs do not cover all vertices");
  std::vector<int> coarse_of(n, -1);
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
    auto [u, v] = pairs[p];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("coarsen: bad vertex pair");
    if (!g.has_edge(u, v))
      throw std::invalid_argument("coarsen: pair is not an edge");
    if (coarse_of[u] != -1 || coarse_of[v] != -1)
      throw std::invalid_argument("coarsen: pairs are not disjoint");
    coarse_of[u] = coarse_of[v] = p;
  }
  std::set<Edge> coarse_edges;
  for (auto [u, v] : g.edges()) {
    int a = coarse_of[u], b = coarse_of[v];
    if (a != b) coarse_edges.insert({std::min(a, b), std::max(a, b)});
  }
  return ConnectivityGraph(static_cast<int>(pairs.size()),
                           {coarse_edges.begin(), coarse_edges.end()});
}

ConnectivityGraph parse_graph(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> label_overrides;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("graph file line " + std::to_string(lineno) +
                               ": " + what);
    };
    if (tag == "n") {
      if (!(ls >> n) || n < 1) fail("bad vertex count");
    } else if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) fail("bad edge");
      if (n < 0) fail("edge before vertex count");
      edges.push_back({u - 1, v - 1});
    } else if (tag == "l") {
      int v, l;
      if (!(ls >> v >> l)) fail("bad label override");
      label_overrides.push_back({v - 1, l - 1});
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw std::runtime_error("graph file: missing 'n' record");
  std::vector<int> labelling(n);
  std::iota(labelling.begin(), labelling.end(), 0);
  for (auto [v, l] : label_overrides) {
    if (v < 0 || v >= n || l < 0 || l >= n)
      throw std::runtime_error("graph file: label override out of range");
    labelling[v] = l;
  }
  return ConnectivityGraph(n, std::move(edges), std::move(labelling));
}

ConnectivityGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const ConnectivityGraph& g) {
  out << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  for (int v = 0; v < g.n(); ++v)
    if (g.label_of(v) != v) out << "l " << v + 1 << " " << g.label_of(v) + 1 << "\n";
}

}  // namespace swapnet
