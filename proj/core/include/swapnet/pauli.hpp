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

enum class PauliAxis : char { X = 'X', Y = 'Y', Z = 'Z' };

/// One real-weighted Pauli string; identity factors are absent.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<std::pair<int, PauliAxis>> paulis;  // sorted by qubit

  void normalize();
  std::string string_key() const;
};

/// Hermitian real-weighted sum of Pauli strings.
struct PauliSum {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  /// Merges duplicate strings and drops exact-zero coefficients.
  PauliSum normalized() const;
  /// Same operator with qubit q relabelled to perm[q].
  PauliSum permuted(const std::vector<int>& perm) const;
};

/// Random all-to-all XX couplings plus Z fields, all uniform in [-1, 1].
struct SpinGlassInstance {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> j;  // couplings for i<j in row-major order
  std::vector<double> h;  // on-site fields

  PauliSum hamiltonian() const;
  std::string to_json() const;
  static SpinGlassInstance from_json(const std::string& text);
};

/// Deterministic per seed. Stream order: J values for i<j row-major, then the
/// n field values, all drawn from mt19937_64 mapped to [-1, 1).
SpinGlassInstance gen_spin_glass(int n, std::uint64_t seed);

/// Each non-comment line is "coef P q [P q]...". An optional "qubits <n>"
/// header overrides the inferred qubit count.
PauliSum parse_pauli_sum(std::istream& in);
PauliSum load_pauli_sum(const std::string& path);
void write_pauli_sum(std::ostream& out, const PauliSum& hm);

}  // namespace swapnet
