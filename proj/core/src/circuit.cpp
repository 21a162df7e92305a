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

#include "swapnet/circuit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace swapnet {

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RY: return "RY";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CRY: return "CRY";
    case GateKind::SWAP: return "SWAP";
    case GateKind::FSWAP: return "FSWAP";
    case GateKind::OSWAP: return "OSWAP";
    case GateKind::SE: return "SE";
    case GateKind::DE: return "DE";
    case GateKind::MCRY: return "MCRY";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"RY", GateKind::RY},       {"H", GateKind::H},
      {"X", GateKind::X},         {"CNOT", GateKind::CNOT},
      {"CZ", GateKind::CZ},       {"CRY", GateKind::CRY},
      {"SWAP", GateKind::SWAP},   {"FSWAP", GateKind::FSWAP},
      {"OSWAP", GateKind::OSWAP}, {"SE", GateKind::SE},
      {"DE", GateKind::DE},       {"MCRY", GateKind::MCRY}};
  auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("unknown gate kind: " + name);
  return it->second;
}

int gate_operand_count(GateKind kind) {
  switch (kind) {
    case GateKind::RY:
    case GateKind::H:
    case GateKind::X:
      return 1;
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CRY:
    case GateKind::SWAP:
    case GateKind::FSWAP:
      return 2;
    default:
      return 4;
  }
}

bool gate_is_parametrized(GateKind kind) {
  return kind == GateKind::RY || kind == GateKind::CRY ||
         kind == GateKind::SE || kind == GateKind::DE ||
         kind == GateKind::MCRY;
}

void Circuit::validate() const {
  for (const auto& g : gates) {
    if (static_cast<int>(g.qubits.size()) != gate_operand_count(g.kind))
      throw std::invalid_argument("circuit: wrong operand count for gate");
    std::vector<int> sorted = g.qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("circuit: repeated operand");
    for (int q : g.qubits)
      if (q < 0 || q >= n_qubits)
        throw std::invalid_argument("circuit: qubit index out of range");
    if (gate_is_parametrized(g.kind)) {
      if (!g.param || *g.param < 0 || *g.param >= n_params)
        throw std::invalid_argument("circuit: bad parameter index");
    } else if (g.param) {
      throw std::invalid_argument("circuit: parameter on fixed gate");
    }
  }
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits) n_qubits = other.n_qubits;
  int offset = n_params;
  for (Gate g : other.gates) {
    if (g.param) *g.param += offset;
    gates.push_back(std::move(g));
  }
  n_params += other.n_params;
}

namespace {

Gate make(GateKind kind, std::vector<int> qubits,
          std::optional<int> param = std::nullopt, double scale = 1.0) {
  return Gate{kind, std::move(qubits), param, scale};
}

void emit_fswap(std::vector<Gate>& out, int a, int b) {
  out.push_back(make(GateKind::CNOT, {b, a}));
  out.push_back(make(GateKind::CNOT, {a, b}));
  out.push_back(make(GateKind::CNOT, {b, a}));
  out.push_back(make(GateKind::CZ, {a, b}));
}

void decompose_gate(std::vector<Gate>& out, const Gate& g) {
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::RY:
    case GateKind::H:
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::MCRY:
      out.push_back(g);
      break;
    case GateKind::CRY:
      out.push_back(make(GateKind::RY, {q[1]}, g.param, g.scale / 2));
      out.push_back(make(GateKind::CNOT, {q[0], q[1]}));
      out.push_back(make(GateKind::RY, {q[1]}, g.param, -g.scale / 2));
      out.push_back(make(GateKind::CNOT, {q[0], q[1]}));
      break;
    case GateKind::SWAP:
      out.push_back(make(GateKind::CNOT, {q[0], q[1]}));
      out.push_back(make(GateKind::CNOT, {q[1], q[0]}));
      out.push_back(make(GateKind::CNOT, {q[0], q[1]}));
      break;
    case GateKind::FSWAP:
      emit_fswap(out, q[0], q[1]);
      break;
    case GateKind::OSWAP:
      // Three Fswap layers; the middle layer holds two parallel Fswaps.
      emit_fswap(out, q[1], q[2]);
      emit_fswap(out, q[0], q[1]);
      emit_fswap(out, q[2], q[3]);
      emit_fswap(out, q[1], q[2]);
      break;
    case GateKind::SE:
      out.push_back(make(GateKind::H, {q[0]}));
      out.push_back(make(GateKind::H, {q[1]}));
      out.push_back(make(GateKind::CNOT, {q[0], q[2]}));
      out.push_back(make(GateKind::CNOT, {q[1], q[3]}));
      for (int i = 0; i < 4; ++i)
        out.push_back(make(GateKind::RY, {q[i]}, g.param, -g.scale / 2));
      out.push_back(make(GateKind::CNOT, {q[1], q[3]}));
      out.push_back(make(GateKind::CNOT, {q[0], q[2]}));
      out.push_back(make(GateKind::H, {q[0]}));
      out.push_back(make(GateKind::H, {q[1]}));
      break;
    case GateKind::DE:
      out.push_back(make(GateKind::CNOT, {q[0], q[1]}));
      out.push_back(make(GateKind::CNOT, {q[2], q[3]}));
      out.push_back(make(GateKind::CNOT, {q[0], q[2]}));
      out.push_back(make(GateKind::X, {q[1]}));
      out.push_back(make(GateKind::X, {q[3]}));
      out.push_back(
          make(GateKind::MCRY, {q[1], q[2], q[3], q[0]}, g.param, -2 * g.scale));
      out.push_back(make(GateKind::X, {q[1]}));
      out.push_back(make(GateKind::X, {q[3]}));
      out.push_back(make(GateKind::CNOT, {q[0], q[2]}));
      out.push_back(make(GateKind::CNOT, {q[0], q[1]}));
      out.push_back(make(GateKind::CNOT, {q[2], q[3]}));
      break;
  }
}

}  // namespace

Circuit decompose(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.n_params = c.n_params;
  for (const auto& g : c.gates) decompose_gate(out.gates, g);
  return out;
}

Metrics metrics(const Circuit& c) {
  Circuit d = decompose(c);
  Metrics m;
  m.n_params = d.n_params;
  std::vector<long long> qubit_depth(d.n_qubits, 0);
  for (const auto& g : d.gates) {
    switch (g.kind) {
      case GateKind::CNOT:
      case GateKind::CZ:
        m.cnot_count += 1;
        break;
      case GateKind::MCRY:
        m.cnot_count += 7;  // triple-controlled RY booked at CNOT equivalents
        break;
      default:
        break;
    }
    long long level = 0;
    for (int q : g.qubits) level = std::max(level, qubit_depth[q]);
    ++level;
    for (int q : g.qubits) qubit_depth[q] = level;
    m.depth = std::max(m.depth, level);
  }
  return m;
}

namespace {

// Misra-Gries proper edge coloring with at most maxdegree+1 colors.
class EdgeColorer {
 public:
  explicit EdgeColorer(const ConnectivityGraph& g)
      : g_(g), n_colors_(g.max_degree() + 1) {
    at_.assign(g.n(), std::vector<int>(n_colors_, -1));
  }

  std::vector<std::vector<Edge>> run() {
    for (auto [u, v] : g_.edges()) color_edge(u, v);
    std::vector<std::vector<Edge>> classes(n_colors_);
    for (auto [u, v] : g_.edges()) classes[color_of(u, v)].push_back({u, v});
    std::erase_if(classes, [](const auto& m) { return m.empty(); });
    return classes;
  }

 private:
  int color_of(int u, int v) const {
    for (int c = 0; c < n_colors_; ++c)
      if (at_[u][c] == v) return c;
    return -1;
  }

  int free_color(int v) const {
    for (int c = 0; c < n_colors_; ++c)
      if (at_[v][c] == -1) return c;
    throw std::logic_error("edge_color: no free color");
  }

  bool is_free(int v, int c) const { return at_[v][c] == -1; }

  void set_color(int u, int v, int c) {
    int old = color_of(u, v);
    if (old >= 0) {
      at_[u][old] = -1;
      at_[v][old] = -1;
    }
    at_[u][c] = v;
    at_[v][c] = u;
  }

  void clear_color(int u, int v) {
    int old = color_of(u, v);
    if (old >= 0) {
      at_[u][old] = -1;
      at_[v][old] = -1;
    }
  }

  std::vector<int> maximal_fan(int u, int v) {
    std::vector<int> fan{v};
    std::vector<char> in_fan(g_.n(), 0);
    in_fan[v] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int w : g_.adjacency()[u]) {
        if (in_fan[w]) continue;
        int c = color_of(u, w);
        if (c >= 0 && is_free(fan.back(), c)) {
          fan.push_back(w);
          in_fan[w] = 1;
          grew = true;
          break;
        }
      }
    }
    return fan;
  }

  void invert_cd_path(int u, int c, int d) {
    // Walk the alternating d,c,... path from u, then flip every edge on it.
    std::vector<Edge> path;
    int cur = u, want = d;
    while (at_[cur][want] != -1) {
      int nxt = at_[cur][want];
      path.push_back({cur, nxt});
      cur = nxt;
      want = (want == d) ? c : d;
    }
    for (auto [a, b] : path) clear_color(a, b);
    want = d;
    for (auto [a, b] : path) {
      set_color(a, b, want == d ? c : d);
      want = (want == d) ? c : d;
    }
  }

  bool fan_prefix_valid(int u, const std::vector<int>& fan, int upto) {
    for (int i = 0; i < upto; ++i) {
      int c = color_of(u, fan[i + 1]);
      if (c < 0 || !is_free(fan[i], c)) return false;
    }
    return true;
  }

  void color_edge(int u, int v) {
    auto fan = maximal_fan(u, v);
    int c = free_color(u);
    int d = free_color(fan.back());
    invert_cd_path(u, c, d);
    int w = -1;
    for (int j = 0; j < static_cast<int>(fan.size()); ++j) {
      if (is_free(fan[j], d) && fan_prefix_valid(u, fan, j)) {
        w = j;
        break;
      }
    }
    if (w < 0) throw std::logic_error("edge_color: no rotation point");
    // Rotate the fan prefix and finish with color d.
    std::vector<int> shifted(w);
    for (int i = 0; i < w; ++i) shifted[i] = color_of(u, fan[i + 1]);
    for (int i = 1; i <= w; ++i) clear_color(u, fan[i]);
    for (int i = 0; i < w; ++i) set_color(u, fan[i], shifted[i]);
    set_color(u, fan[w], d);
  }

  const ConnectivityGraph& g_;
  int n_colors_;
  std::vector<std::vector<int>> at_;  // vertex -> color -> neighbour (-1 free)
};

}  // namespace

std::vector<std::vector<Edge>> edge_color(const ConnectivityGraph& g) {
  auto classes = EdgeColorer(g).run();
  // Sanity: proper coloring covering every edge.
  std::size_t total = 0;
  for (const auto& m : classes) {
    std::vector<char> used(g.n(), 0);
    for (auto [u, v] : m) {
      if (used[u] || used[v]) throw std::logic_error("edge_color: not a matching");
      used[u] = used[v] = 1;
    }
    total += m.size();
  }
  if (total != g.edges().size())
    throw std::logic_error("edge_color: missing edges");
  return classes;
}

Circuit build_cry_hea(const ConnectivityGraph& g, int layers) {
  if (layers < 0) throw std::invalid_argument("layers must be >= 0");
  Circuit c;
  c.n_qubits = g.n();
  if (layers == 0) return c;
  auto matchings = edge_color(g);
  for (int layer = 0; layer < layers; ++layer) {
    for (const auto& m : matchings) {
      for (auto [u, v] : m) {
        c.gates.push_back(make(GateKind::RY, {u}, c.n_params));
        c.gates.push_back(make(GateKind::RY, {v}, c.n_params + 1));
        c.gates.push_back(make(GateKind::CRY, {u, v}, c.n_params + 2));
        c.n_params += 3;
      }
    }
  }
  return c;
}

Circuit build_excitation_ansatz(const ConnectivityGraph& g_mo, int layers) {
  if (layers < 0) throw std::invalid_argument("layers must be >= 0");
  Circuit c;
  c.n_qubits = 2 * g_mo.n();
  if (layers == 0) return c;
  auto matchings = edge_color(g_mo);
  for (int layer = 0; layer < layers; ++layer) {
    for (const auto& m : matchings) {
      for (auto [a, b] : m) {
        std::vector<int> q{2 * a, 2 * a + 1, 2 * b, 2 * b + 1};
        c.gates.push_back(make(GateKind::DE, q, c.n_params));
        c.gates.push_back(make(GateKind::SE, q, c.n_params + 1));
        c.n_params += 2;
      }
    }
  }
  return c;
}

Circuit embed_swap_network(const ConnectivityGraph& g,
                           const SwapProtocol& protocol, int layers_per_slot,
                           int repetitions, SwapFlavor flavor) {
  if (protocol.n != g.n())
    throw std::invalid_argument("embed: protocol/graph size mismatch");
  if (repetitions < 1)
    throw std::invalid_argument("embed: repetitions must be >= 1");

  auto slot = flavor == SwapFlavor::qubit
                  ? build_cry_hea(g, layers_per_slot)
                  : build_excitation_ansatz(g, layers_per_slot);

  Circuit c;
  c.n_qubits = slot.n_qubits;
  for (int rep = 0; rep < repetitions; ++rep) {
    c.append(slot);
    for (const auto& block : protocol.blocks) {
      for (const auto& layer : block.layers) {
        for (auto [u, v] : layer.swaps) {
          if (flavor == SwapFlavor::qubit) {
            c.gates.push_back(make(GateKind::SWAP, {u, v}));
          } else {
            c.gates.push_back(
                make(GateKind::OSWAP, {2 * u, 2 * u + 1, 2 * v, 2 * v + 1}));
          }
        }
      }
      c.append(slot);
    }
  }
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["n_qubits"] = c.n_qubits;
  j["n_params"] = c.n_params;
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates) {
    nlohmann::json jg;
    jg["kind"] = gate_kind_name(g.kind);
    jg["qubits"] = g.qubits;
    if (g.param) jg["param"] = *g.param;
    if (g.scale != 1.0) jg["scale"] = g.scale;
    gates.push_back(jg);
  }
  j["gates"] = gates;
  return j.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Circuit c;
  c.n_qubits = j.at("n_qubits").get<int>();
  c.n_params = j.at("n_params").get<int>();
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
    g.qubits = jg.at("qubits").get<std::vector<int>>();
    if (jg.contains("param")) g.param = jg.at("param").get<int>();
    g.scale = jg.value("scale", 1.0);
    c.gates.push_back(std::move(g));
  }
  c.validate();
  return c;
}

}  // namespace swapnet
