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

#include "swapnet/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace swapnet {

namespace {

using Complex = std::complex<double>;

constexpr int kMaxQubits = 20;

struct PauliMask {
  std::uint64_t flip = 0;  // X or Y
  std::uint64_t z = 0;     // Z or Y
  std::uint64_t y = 0;     // Y
};

Complex mask_phase(const PauliMask& m, std::uint64_t x) {
  Complex phase;
  switch (std::popcount(m.y) & 3) {
    case 0: phase = {1.0, 0.0}; break;
    case 1: phase = {0.0, 1.0}; break;
    case 2: phase = {-1.0, 0.0}; break;
    default: phase = {0.0, -1.0}; break;
  }
  if (std::popcount(x & m.z) & 1) phase = -phase;
  return phase;
}

// In-place exp(i * angle * P) for a Pauli string P.
void apply_pauli_exp(State& s, const PauliMask& m, double angle) {
  auto& amp = s.amplitudes();
  const std::uint64_t dim = amp.size();
  const double c = std::cos(angle), sn = std::sin(angle);
  if (m.flip == 0) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      Complex diag = mask_phase(m, x);  // +-1 (Z-only string)
      amp[x] *= Complex(c, 0.0) + Complex(0.0, sn) * diag;
    }
    return;
  }
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::uint64_t y = x ^ m.flip;
    if (y < x) continue;
    Complex ax = amp[x], ay = amp[y];
    amp[x] = c * ax + Complex(0.0, sn) * mask_phase(m, y) * ay;
    amp[y] = c * ay + Complex(0.0, sn) * mask_phase(m, x) * ax;
  }
}

void apply_1q(State& s, int q, const Complex u[2][2]) {
  auto& amp = s.amplitudes();
  const std::uint64_t bit = 1ULL << q;
  const std::uint64_t dim = amp.size();
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & bit) continue;
    Complex a0 = amp[x], a1 = amp[x | bit];
    amp[x] = u[0][0] * a0 + u[0][1] * a1;
    amp[x | bit] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void apply_controlled_ry(State& s, std::uint64_t control_mask, int target,
                         double theta) {
  auto& amp = s.amplitudes();
  const std::uint64_t bit = 1ULL << target;
  const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
  const std::uint64_t dim = amp.size();
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & bit) continue;
    if ((x & control_mask) != control_mask) continue;
    Complex a0 = amp[x], a1 = amp[x | bit];
    amp[x] = c * a0 - sn * a1;
    amp[x | bit] = sn * a0 + c * a1;
  }
}

void apply_swap_like(State& s, int a, int b, bool fermionic) {
  auto& amp = s.amplitudes();
  const std::uint64_t ba = 1ULL << a, bb = 1ULL << b;
  const std::uint64_t dim = amp.size();
  for (std::uint64_t x = 0; x < dim; ++x) {
    bool va = x & ba, vb = x & bb;
    if (va == vb) {
      if (fermionic && va) amp[x] = -amp[x];
      continue;
    }
    if (!va) continue;  // visit each pair once, from the a=1,b=0 side
    std::uint64_t y = (x ^ ba) | bb;
    std::swap(amp[x], amp[y]);
  }
}

// Commuting Pauli-string generators of the approximate excitations, written
// over the gate operands (a_alpha, a_beta, b_alpha, b_beta).
struct GeneratorString {
  const char* axes;  // 4 chars over {I,X,Y}
  double sign;
};

constexpr GeneratorString kSingleExcitation[] = {
    {"XIYI", 1.0}, {"YIXI", -1.0}, {"IXIY", 1.0}, {"IYIX", -1.0}};

constexpr GeneratorString kDoubleExcitation[] = {
    {"YXXX", 1.0},  {"XYXX", 1.0},  {"XXYX", -1.0}, {"XXXY", -1.0},
    {"YYXY", 1.0},  {"YYYX", 1.0},  {"XYYY", -1.0}, {"YXYY", -1.0}};

PauliMask make_mask(const char* axes, const std::vector<int>& qubits) {
  PauliMask m;
  for (int i = 0; i < 4; ++i) {
    std::uint64_t bit = 1ULL << qubits[i];
    switch (axes[i]) {
      case 'X': m.flip |= bit; break;
      case 'Y': m.flip |= bit; m.z |= bit; m.y |= bit; break;
      default: break;
    }
  }
  return m;
}

}  // namespace

State::State(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("state: qubit count out of range (1..20)");
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

double State::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return std::sqrt(acc);
}

void apply_gate(State& s, const Gate& gate, std::span<const double> params) {
  for (int q : gate.qubits)
    if (q < 0 || q >= s.n_qubits())
      throw std::invalid_argument("apply_gate: qubit out of range");

  double theta = 0.0;
  if (gate_is_parametrized(gate.kind)) {
    if (!gate.param || *gate.param >= static_cast<int>(params.size()))
      throw std::invalid_argument("apply_gate: missing parameter");
    theta = gate.scale * params[*gate.param];
  }
  const auto& q = gate.qubits;

  switch (gate.kind) {
    case GateKind::RY: {
      const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
      const Complex u[2][2] = {{c, -sn}, {sn, c}};
      apply_1q(s, q[0], u);
      break;
    }
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      const Complex u[2][2] = {{r, r}, {r, -r}};
      apply_1q(s, q[0], u);
      break;
    }
    case GateKind::X: {
      const Complex u[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
      apply_1q(s, q[0], u);
      break;
    }
    case GateKind::CNOT: {
      auto& amp = s.amplitudes();
      const std::uint64_t cb = 1ULL << q[0], tb = 1ULL << q[1];
      for (std::uint64_t x = 0; x < amp.size(); ++x)
        if ((x & cb) && !(x & tb)) std::swap(amp[x], amp[x | tb]);
      break;
    }
    case GateKind::CZ: {
      auto& amp = s.amplitudes();
      const std::uint64_t mask = (1ULL << q[0]) | (1ULL << q[1]);
      for (std::uint64_t x = 0; x < amp.size(); ++x)
        if ((x & mask) == mask) amp[x] = -amp[x];
      break;
    }
    case GateKind::CRY:
      apply_controlled_ry(s, 1ULL << q[0], q[1], theta);
      break;
    case GateKind::MCRY:
      apply_controlled_ry(
          s, (1ULL << q[0]) | (1ULL << q[1]) | (1ULL << q[2]), q[3], theta);
      break;
    case GateKind::SWAP:
      apply_swap_like(s, q[0], q[1], false);
      break;
    case GateKind::FSWAP:
      apply_swap_like(s, q[0], q[1], true);
      break;
    case GateKind::OSWAP:
      apply_swap_like(s, q[1], q[2], true);
      apply_swap_like(s, q[0], q[1], true);
      apply_swap_like(s, q[2], q[3], true);
      apply_swap_like(s, q[1], q[2], true);
      break;
    case GateKind::SE:
      for (const auto& g : kSingleExcitation)
        apply_pauli_exp(s, make_mask(g.axes, q), g.sign * theta / 4);
      break;
    case GateKind::DE:
      for (const auto& g : kDoubleExcitation)
        apply_pauli_exp(s, make_mask(g.axes, q), g.sign * theta / 8);
      break;
  }
}

State simulate(const Circuit& c, std::span<const double> params) {
  if (static_cast<int>(params.size()) != c.n_params)
    throw std::invalid_argument("simulate: parameter count mismatch");
  State s(c.n_qubits == 0 ? 1 : c.n_qubits);
  for (const auto& g : c.gates) apply_gate(s, g, params);
  return s;
}

double expectation(const State& s, const PauliSum& hm) {
  if (hm.n_qubits != s.n_qubits())
    throw std::invalid_argument("expectation: size mismatch");
  const auto& amp = s.amplitudes();
  Complex acc = 0.0;
  for (const auto& t : hm.terms) {
    PauliMask m;
    for (auto [qi, a] : t.paulis) {
      std::uint64_t bit = 1ULL << qi;
      switch (a) {
        case PauliAxis::X: m.flip |= bit; break;
        case PauliAxis::Y: m.flip |= bit; m.z |= bit; m.y |= bit; break;
        case PauliAxis::Z: m.z |= bit; break;
      }
    }
    Complex term = 0.0;
    for (std::uint64_t x = 0; x < amp.size(); ++x)
      term += std::conj(amp[x ^ m.flip]) * mask_phase(m, x) * amp[x];
    acc += t.coefficient * term;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw std::runtime_error("expectation: non-real value");
  return acc.real();
}

}  // namespace swapnet
