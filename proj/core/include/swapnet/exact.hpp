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

#include "swapnet/pauli.hpp"

namespace swapnet {

/// Minimum eigenvalue of the Hamiltonian to within 1e-9. Dense eigensolve up
/// to 10 qubits, matrix-free Lanczos for 11..14; larger systems are rejected.
double exact_ground_energy(const PauliSum& hm);

// Individual strategies, exposed so tests can cross-check them.
double exact_ground_energy_dense(const PauliSum& hm);
double exact_ground_energy_lanczos(const PauliSum& hm);

}  // namespace swapnet
