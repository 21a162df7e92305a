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

#include "swapnet/router.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace swapnet {

void AnnealConfig::validate() const {
  if (k < 1) throw std::invalid_argument("anneal: k must be >= 1");
  if (steps < 0) throw std::invalid_argument("anneal: steps must be >= 1");
  if (alpha <= 0.0 || alpha >= 1.0)
    throw std::invalid_argument("anneal: alpha must be in (0,1)");
  if (p_add <= 0.0 || p_add >= 1.0)
    throw std::invalid_argument("anneal: p_add must be in (0,1)");
  if (restarts < 1) throw std::invalid_argument("anneal: restarts must be >= 1");
  if (t0 < 0.0) throw std::invalid_argument("anneal: t0 must be >= 0");
  if (dist_exponent < 1)
    throw std::invalid_argument("anneal: dist_exponent must be >= 1");
  if (max_blocks && *max_blocks < 1)
    throw std::invalid_argument("anneal: max_blocks must be >= 1");
}

int SwapProtocol::total_layers() const {
  int t = 0;
  for (const auto& b : blocks) t += static_cast<int>(b.layers.size());
  return t;
}

int SwapProtocol::total_swaps() const {
  int t = 0;
  for (const auto& b : blocks) t += b.total_swaps();
  return t;
}

std::vector<int> SwapProtocol::final_labelling(
    const std::vector<int>& initial) const {
  std::vector<int> labelling = initial;
  for (const auto& block : blocks)
    for (const auto& layer : block.layers)
      for (auto [u, v] : layer.swaps) std::swap(labelling[u], labelling[v]);
  return labelling;
}

long long routing_cost(const ConnectivityGraph& g, const HistoryMatrix& h,
                       int dist_exponent) {
  if (h.n() != g.n())
    throw std::invalid_argument("cost: history/graph dimension mismatch");
  auto d = all_pairs_distances(g);
  long long c = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (!h.get(i, j)) continue;
      long long term = 1;
      for (int e = 0; e < dist_exponent; ++e) term *= d[i][j];
      c += term;
    }
  return c;
}

SwapBlock propose_move(const SwapBlock& block, const ConnectivityGraph& g,
                       const AnnealConfig& cfg, Rng& rng) {
  SwapBlock out = block;
  auto& layer = out.layers[rng.next_index(out.layers.size())];
  bool add = rng.next_bernoulli(cfg.p_add);

  auto try_add = [&]() -> bool {
    std::vector<char> used(g.n(), 0);
    for (auto [u, v] : layer.swaps) used[u] = used[v] = 1;
    std::vector<Edge> candidates;
    for (auto e : g.edges())
      if (!used[e.first] && !used[e.second]) candidates.push_back(e);
    if (candidates.empty()) return false;
    layer.swaps.push_back(candidates[rng.next_index(candidates.size())]);
    std::sort(layer.swaps.begin(), layer.swaps.end());
    return true;
  };
  auto try_remove = [&]() -> bool {
    if (layer.swaps.empty()) return false;
    layer.swaps.erase(layer.swaps.begin() +
                      static_cast<long>(rng.next_index(layer.swaps.size())));
    return true;
  };

  if (add) {
    if (!try_add()) try_remove();
  } else {
    if (!try_remove()) try_add();
  }
  return out;
}

namespace {

struct Candidate {
  SwapBlock block;
  ConnectivityGraph graph;
  HistoryMatrix history;
  long long cost;
};

Candidate evaluate(const ConnectivityGraph& g, const HistoryMatrix& h,
                   const SwapBlock& block, int dist_exponent) {
  ConnectivityGraph g2 = apply_swap_block(g, block);
  HistoryMatrix h2 = update_history(h, g2);
  long long c = routing_cost(g2, h2, dist_exponent);
  return {block, std::move(g2), std::move(h2), c};
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.block.total_swaps() < b.block.total_swaps();
}

double estimate_t0(const ConnectivityGraph& g, const HistoryMatrix& h,
                   const AnnealConfig& cfg) {
  // Mean |delta C| over random probe moves from the empty block.
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  SwapBlock cur{std::vector<SwapLayer>(cfg.k)};
  long long c0 = evaluate(g, h, cur, cfg.dist_exponent).cost;
  double acc = 0.0;
  int probes = 50;
  long long c = c0;
  for (int i = 0; i < probes; ++i) {
    SwapBlock cand = propose_move(cur, g, cfg, rng);
    long long cc = evaluate(g, h, cand, cfg.dist_exponent).cost;
    acc += static_cast<double>(std::llabs(cc - c));
    cur = std::move(cand);
    c = cc;
  }
  double t0 = acc / probes;
  return t0 > 0.0 ? t0 : 1.0;
}

}  // namespace

AnnealResult anneal_block(const ConnectivityGraph& g, const HistoryMatrix& h,
                          const AnnealConfig& cfg) {
  cfg.validate();
  if (h.all_zero()) throw std::runtime_error("nothing to route");

  SwapBlock empty{std::vector<SwapLayer>(cfg.k)};
  Candidate best = evaluate(g, h, empty, cfg.dist_exponent);
  double t0 = cfg.t0 > 0.0 ? cfg.t0 : estimate_t0(g, h, cfg);
  int steps = cfg.effective_steps();

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(restart));
    Candidate cur = evaluate(g, h, empty, cfg.dist_exponent);
    double temp = t0;
    for (int step = 0; step < steps; ++step) {
      SwapBlock proposal = propose_move(cur.block, g, cfg, rng);
      Candidate cand = evaluate(g, h, proposal, cfg.dist_exponent);
      long long delta = cand.cost - cur.cost;
      if (delta <= 0 ||
          rng.next_double() < std::exp(-static_cast<double>(delta) / temp)) {
        cur = std::move(cand);
        if (better(cur, best)) best = cur;
      }
      temp *= cfg.alpha;
    }
  }
  return {best.block, best.graph, best.history, best.cost};
}

SwapProtocol optimize_network(const ConnectivityGraph& g,
                              const AnnealConfig& cfg) {
  cfg.validate();
  if (!g.connected()) throw std::runtime_error("graph not connected");

  SwapProtocol protocol;
  protocol.n = g.n();
  protocol.k = cfg.k;
  protocol.seed = cfg.seed;

  ConnectivityGraph cur = g;
  HistoryMatrix h = init_history(cur);
  if (h.all_zero()) {
    protocol.complete = true;
    return protocol;
  }

  int hard_cap = cfg.max_blocks ? *cfg.max_blocks : 10 * g.n();
  int stalls = 0;
  int block_index = 0;
  while (!h.all_zero()) {
    if (block_index >= hard_cap) break;
    AnnealConfig block_cfg = cfg;
    block_cfg.seed = cfg.seed + 1000003ULL * static_cast<std::uint64_t>(
                                    block_index + 17 * stalls);
    AnnealResult res = anneal_block(cur, h, block_cfg);
    int gained = h.weight() - res.history.weight();
    if (res.block.total_swaps() == 0 || gained == 0) {
      // No new adjacency this round; retry with a shifted seed a few times.
      if (++stalls > 6) break;
      if (res.block.total_swaps() == 0) continue;
    } else {
      stalls = 0;
    }
    while (!res.block.layers.empty() && res.block.layers.back().swaps.empty())
      res.block.layers.pop_back();
    protocol.blocks.push_back(res.block);
    protocol.labelling_trace.push_back(res.graph.labelling());
    protocol.cost_trace.push_back(res.cost);
    cur = res.graph;
    h = res.history;
    ++block_index;
  }
  protocol.complete = h.all_zero();
  return protocol;
}

namespace {

std::vector<std::vector<Edge>> enumerate_matchings(const ConnectivityGraph& g) {
  // All non-empty matchings, edges taken in sorted order.
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  const auto& edges = g.edges();
  auto rec = [&](auto&& self, std::size_t start, unsigned used) -> void {
    for (std::size_t i = start; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (used & ((1u << u) | (1u << v))) continue;
      cur.push_back(edges[i]);
      out.push_back(cur);
      self(self, i + 1, used | (1u << u) | (1u << v));
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::uint64_t encode_state(const std::vector<int>& labelling,
                           std::uint32_t hist_bits) {
  std::uint64_t key = hist_bits;
  for (int l : labelling) key = key * 7 + static_cast<std::uint64_t>(l) + 1;
  return key;
}

std::uint32_t history_bits(const HistoryMatrix& h) {
  std::uint32_t bits = 0;
  int b = 0;
  for (int i = 0; i < h.n(); ++i)
    for (int j = i + 1; j < h.n(); ++j, ++b)
      if (h.get(i, j)) bits |= (1u << b);
  return bits;
}

}  // namespace

std::optional<SwapProtocol> brute_force_network(const ConnectivityGraph& g,
                                                int k, int max_layers) {
  if (g.n() > 6)
    throw std::invalid_argument("brute_force_network: n must be <= 6");
  if (!g.connected()) throw std::runtime_error("graph not connected");

  auto matchings = enumerate_matchings(g);

  struct Node {
    std::vector<int> labelling;
    std::uint32_t hist;
    int layers;
    std::uint64_t key;
  };
  struct Parent {
    std::uint64_t prev_key;
    SwapBlock block;
  };

  HistoryMatrix h0 = init_history(g);
  std::uint32_t target = 0;
  std::uint32_t start_hist = history_bits(h0);

  auto make_protocol = [&](const std::vector<SwapBlock>& blocks) {
    SwapProtocol p;
    p.n = g.n();
    p.k = k;
    p.blocks = blocks;
    p.complete = true;
    ConnectivityGraph cur = g;
    HistoryMatrix h = h0;
    for (const auto& b : blocks) {
      cur = apply_swap_block(cur, b);
      h = update_history(h, cur);
      p.labelling_trace.push_back(cur.labelling());
      p.cost_trace.push_back(routing_cost(cur, h));
    }
    return p;
  };

  if (start_hist == target) return make_protocol({});

  // Dijkstra over (labelling, history); one move is a block of 1..k
  // matchings with weight = layer count, history updated at the block end.
  using QItem = std::pair<int, std::uint64_t>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue;
  std::unordered_map<std::uint64_t, Node> nodes;
  std::unordered_map<std::uint64_t, Parent> parents;

  Node start{g.labelling(), start_hist, 0, 0};
  start.key = encode_state(start.labelling, start.hist);
  nodes[start.key] = start;
  queue.push({0, start.key});

  // Pair-bit helper for history updates.
  auto pair_bit = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    int b = 0;
    for (int a = 0; a < i; ++a) b += g.n() - 1 - a;
    return b + (j - i - 1);
  };

  std::uint64_t goal_key = 0;
  bool found = false;
  while (!queue.empty()) {
    auto [dist, key] = queue.top();
    queue.pop();
    Node node = nodes[key];
    if (dist > node.layers) continue;
    if (node.hist == target) {
      goal_key = key;
      found = true;
      break;
    }
    if (node.layers >= max_layers) continue;

    // Expand blocks of up to k matchings via DFS over matching choices.
    struct Partial {
      std::vector<int> labelling;
      SwapBlock block;
    };
    std::vector<Partial> frontier{{node.labelling, {}}};
    for (int depth = 1; depth <= k && node.layers + depth <= max_layers;
         ++depth) {
      std::vector<Partial> next;
      for (const auto& partial : frontier) {
        for (const auto& m : matchings) {
          Partial ext = partial;
          for (auto [u, v] : m) std::swap(ext.labelling[u], ext.labelling[v]);
          ext.block.layers.push_back({m});
          // Close the block here: update history on the new adjacency.
          std::uint32_t hist = node.hist;
          for (auto [u, v] : g.edges())
            hist &= ~(1u << pair_bit(ext.labelling[u], ext.labelling[v]));
          std::uint64_t nkey = encode_state(ext.labelling, hist);
          int nlayers = node.layers + depth;
          auto it = nodes.find(nkey);
          if (it == nodes.end() || nlayers < it->second.layers) {
            nodes[nkey] = {ext.labelling, hist, nlayers, nkey};
            parents[nkey] = {key, ext.block};
            queue.push({nlayers, nkey});
          }
          next.push_back(std::move(ext));
        }
      }
      frontier = std::move(next);
    }
  }

  if (!found) return std::nullopt;

  std::vector<SwapBlock> blocks;
  for (std::uint64_t key = goal_key; key != start.key;) {
    auto& par = parents[key];
    blocks.push_back(par.block);
    key = par.prev_key;
  }
  std::reverse(blocks.begin(), blocks.end());
  return make_protocol(blocks);
}

bool verify_protocol(const ConnectivityGraph& g, const SwapProtocol& p,
                     int dist_exponent) {
  if (p.n != g.n()) return false;
  ConnectivityGraph cur = g;
  HistoryMatrix h = init_history(cur);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    try {
      cur = apply_swap_block(cur, p.blocks[i]);
    } catch (const std::exception&) {
      return false;
    }
    h = update_history(h, cur);
    if (i < p.labelling_trace.size() && p.labelling_trace[i] != cur.labelling())
      return false;
    if (i < p.cost_trace.size() &&
        p.cost_trace[i] != routing_cost(cur, h, dist_exponent))
      return false;
  }
  return !p.complete || h.all_zero();
}

std::string protocol_to_json(const SwapProtocol& p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["seed"] = p.seed;
  j["complete"] = p.complete;
  j["cost_trace"] = p.cost_trace;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : p.blocks) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& l : b.layers) {
      nlohmann::json swaps = nlohmann::json::array();
      for (auto [u, v] : l.swaps) swaps.push_back({u + 1, v + 1});
      layers.push_back(swaps);
    }
    blocks.push_back(layers);
  }
  j["blocks"] = blocks;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& labelling : p.labelling_trace) {
    nlohmann::json row = nlohmann::json::array();
    for (int l : labelling) row.push_back(l + 1);
    trace.push_back(row);
  }
  j["labelling_trace"] = trace;
  return j.dump(2) + "\n";
}

SwapProtocol protocol_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SwapProtocol p;
  p.n = j.at("n").get<int>();
  p.k = j.at("k").get<int>();
  p.seed = j.value("seed", std::uint64_t{0});
  p.complete = j.at("complete").get<bool>();
  p.cost_trace = j.value("cost_trace", std::vector<long long>{});
  for (const auto& layers : j.at("blocks")) {
    SwapBlock b;
    for (const auto& swaps : layers) {
      SwapLayer l;
      for (const auto& pr : swaps)
        l.swaps.push_back({pr.at(0).get<int>() - 1, pr.at(1).get<int>() - 1});
      b.layers.push_back(std::move(l));
    }
    p.blocks.push_back(std::move(b));
  }
  for (const auto& row : j.value("labelling_trace", nlohmann::json::array())) {
    std::vector<int> labelling;
    for (const auto& l : row) labelling.push_back(l.get<int>() - 1);
    p.labelling_trace.push_back(std::move(labelling));
  }
  return p;
}

}  // namespace swapnet
