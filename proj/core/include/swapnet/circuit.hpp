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

#include <optional>
#include <string>
#include <vector>

#include "swapnet/graph.hpp"
#include "swapnet/router.hpp"

namespace swapnet {

enum class GateKind {
  RY,
  H,
  X,
  CNOT,
  CZ,
  CRY,
  SWAP,
  FSWAP,
  OSWAP,
  SE,    // approximate single excitation between two orbitals (4 qubits)
  DE,    // approximate double excitation between two orbitals (4 qubits)
  MCRY,  // RY on the last operand controlled by the preceding three
};

const char* gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);
int gate_operand_count(GateKind kind);
bool gate_is_parametrized(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<int> qubits;
  std::optional<int> param;
  // Effective angle = scale * params[*param]; decompositions use fractional
  // and negated scales (e.g. the +-theta/2 rotations inside CRY).
  double scale = 1.0;
};

struct Metrics {
  long long cnot_count = 0;  // two-qubit-equivalent gates after decomposition
  long long depth = 0;
  int n_params = 0;
};

/// Ordered gate list over n qubits with a shared parameter table. Builders
/// assign one fresh parameter index per parametrized gate.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  int n_params = 0;

  void validate() const;
  void append(const Circuit& other);
};

/// Rewrites to {RY, H, X, CNOT, CZ, MCRY}. SWAP -> 3 CNOT; CRY -> 2 CNOT +
/// 2 RY; FSWAP -> 3 CNOT + CZ; OSWAP -> 4 FSWAP in 3 layers (recursively);
/// SE -> the 4-CNOT pattern; DE -> 6 CNOT + one triple-controlled RY.
Circuit decompose(const Circuit& c);

/// Resource metrics on the decomposed form. Depth is the greedy schedule
/// counting every gate; CNOT and CZ count 1, the triple-controlled RY inside
/// DE counts 7 (so a DE totals 13 two-qubit equivalents).
Metrics metrics(const Circuit& c);

/// Partitions the edge set into matchings (proper edge coloring, Misra-Gries,
/// at most maxdegree+1 classes). Deterministic.
std::vector<std::vector<Edge>> edge_color(const ConnectivityGraph& g);

/// Layered hardware-efficient ansatz: per layer, one entangling gate
/// (Ry x Ry then CRy, 3 fresh parameters) on every edge, scheduled
/// matching-by-matching.
Circuit build_cry_hea(const ConnectivityGraph& g, int layers);

/// Excitation-based ansatz on a coarse molecular-orbital graph with m nodes;
/// acts on 2m qubits, orbital i on qubits (2i, 2i+1). Per layer, one DE + SE
/// pair (2 fresh parameters) on every coarse edge.
Circuit build_excitation_ansatz(const ConnectivityGraph& g_mo, int layers);

enum class SwapFlavor { qubit, fermionic };

/// Interleaves entangling slots with the protocol's swap blocks:
/// [slot, block_1, slot, ..., block_B, slot] repeated `repetitions` times.
/// Qubit flavor emits SWAP per swap on the host graph; fermionic flavor emits
/// OSWAP per coarse swap and excitation-based entangling slots.
Circuit embed_swap_network(const ConnectivityGraph& g,
                           const SwapProtocol& protocol, int layers_per_slot,
                           int repetitions, SwapFlavor flavor);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

}  // namespace swapnet
