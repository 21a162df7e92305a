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

#include <complex>
#include <span>
#include <vector>

#include "swapnet/circuit.hpp"
#include "swapnet/pauli.hpp"

namespace swapnet {

/// Dense statevector, little-endian: qubit 0 is the least significant bit of
/// the basis index. Capped at 20 qubits.
class State {
 public:
  explicit State(int n_qubits);  // |0...0>

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amplitudes_;
  }
  std::vector<std::complex<double>>& amplitudes() { return amplitudes_; }
  double norm() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amplitudes_;
};

/// Applies one gate in place. Parametrized gates read their angle as
/// gate.scale * params[*gate.param]. SE/DE are applied as products of
/// commuting Pauli-string exponentials with the t/4 and t/8 prefactors.
void apply_gate(State& s, const Gate& gate, std::span<const double> params);

State simulate(const Circuit& c, std::span<const double> params);

/// <psi|H|psi>; asserts the imaginary residue is below 1e-10 and discards it.
double expectation(const State& s, const PauliSum& hm);

}  // namespace swapnet
