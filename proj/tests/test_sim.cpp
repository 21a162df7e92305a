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

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "helpers.hpp"
#include "swapnet/circuit.hpp"
#include "swapnet/rng.hpp"
#include "swapnet/statevector.hpp"

using namespace swapnet;
using swapnet::testing::randomize_state;
using swapnet::testing::state_distance;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

namespace {

// ----- Independent dense-matrix oracle ------------------------------------
// Gate unitaries are built as explicit matrices over the gate's operand
// sub-register (bit t of the sub-index = operand t), then embedded into the
// full little-endian register.

Matrix pauli_string(const std::string& axes) {
  // axes[i] in {I,X,Y,Z} acts on sub-qubit i.
  int m = static_cast<int>(axes.size());
  Eigen::Index dim = Eigen::Index{1} << m;
  Matrix out = Matrix::Zero(dim, dim);
  std::uint64_t flip = 0, z = 0, y = 0;
  for (int i = 0; i < m; ++i) {
    std::uint64_t bit = 1ULL << i;
    switch (axes[i]) {
      case 'X': flip |= bit; break;
      case 'Y': flip |= bit; z |= bit; y |= bit; break;
      case 'Z': z |= bit; break;
      default: break;
    }
  }
  for (Eigen::Index s = 0; s < dim; ++s) {
    auto us = static_cast<std::uint64_t>(s);
    Complex phase{1.0, 0.0};
    switch (std::popcount(y) & 3) {
      case 1: phase = {0.0, 1.0}; break;
      case 2: phase = {-1.0, 0.0}; break;
      case 3: phase = {0.0, -1.0}; break;
      default: break;
    }
    if (std::popcount(us & z) & 1) phase = -phase;
    out(static_cast<Eigen::Index>(us ^ flip), s) = phase;
  }
  return out;
}

Matrix ry(double theta) {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

Matrix controlled_ry(int m, std::uint64_t controls, int target, double theta) {
  Eigen::Index dim = Eigen::Index{1} << m;
  Matrix out = Matrix::Identity(dim, dim);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  std::uint64_t tbit = 1ULL << target;
  for (Eigen::Index x = 0; x < dim; ++x) {
    auto ux = static_cast<std::uint64_t>(x);
    if ((ux & controls) != controls || (ux & tbit)) continue;
    out(x, x) = c;
    out(x, static_cast<Eigen::Index>(ux | tbit)) = -s;
    out(static_cast<Eigen::Index>(ux | tbit), x) = s;
    out(static_cast<Eigen::Index>(ux | tbit), static_cast<Eigen::Index>(ux | tbit)) = c;
  }
  return out;
}

Matrix fswap4() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = -1;
  return m;
}

Matrix embed_fswap(int a, int b) {
  // Fswap on sub-qubits a,b of a 4-qubit sub-register.
  std::string axes_id = "IIII";
  Matrix out = Matrix::Zero(16, 16);
  for (Eigen::Index x = 0; x < 16; ++x) {
    auto ux = static_cast<std::uint64_t>(x);
    bool va = ux & (1ULL << a), vb = ux & (1ULL << b);
    std::uint64_t yy = ux;
    Complex amp{1.0, 0.0};
    if (va != vb)
      yy = (ux ^ (1ULL << a)) ^ (1ULL << b);
    else if (va && vb)
      amp = -1.0;
    out(static_cast<Eigen::Index>(yy), x) = amp;
  }
  (void)axes_id;
  return out;
}

Matrix gate_matrix(GateKind kind, double theta) {
  const Complex i{0.0, 1.0};
  switch (kind) {
    case GateKind::RY:
      return ry(theta);
    case GateKind::H: {
      Matrix m(2, 2);
      double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::X:
      return pauli_string("X");
    case GateKind::CNOT: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = 1;
      m(2, 2) = 1;
      m(3, 1) = 1;
      m(1, 3) = 1;
      return m;
    }
    case GateKind::CZ: {
      Matrix m = Matrix::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    }
    case GateKind::CRY:
      return controlled_ry(2, 0b01, 1, theta);
    case GateKind::SWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      return m;
    }
    case GateKind::FSWAP:
      return fswap4();
    case GateKind::OSWAP:
      return embed_fswap(1, 2) * embed_fswap(0, 1) * embed_fswap(2, 3) *
             embed_fswap(1, 2);
    case GateKind::SE: {
      Matrix g = pauli_string("XIYI") - pauli_string("YIXI") +
                 pauli_string("IXIY") - pauli_string("IYIX");
      return (i * (theta / 4) * g).exp();
    }
    case GateKind::DE: {
      Matrix g = pauli_string("YXXX") + pauli_string("XYXX") -
                 pauli_string("XXYX") - pauli_string("XXXY") +
                 pauli_string("YYXY") + pauli_string("YYYX") -
                 pauli_string("XYYY") - pauli_string("YXYY");
      return (i * (theta / 8) * g).exp();
    }
    case GateKind::MCRY:
      return controlled_ry(4, 0b0111, 3, theta);
  }
  return {};
}

// Embed the gate's sub-register unitary into an n-qubit register and apply
// it to the oracle vector in place.
void oracle_apply(Eigen::VectorXcd& vec, const Gate& gate, double theta,
                  int n_qubits) {
  Matrix u = gate_matrix(gate.kind, theta);
  int m = static_cast<int>(gate.qubits.size());
  Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    auto ux = static_cast<std::uint64_t>(x);
    std::uint64_t sub = 0;
    for (int t = 0; t < m; ++t)
      if (ux & (1ULL << gate.qubits[t])) sub |= 1ULL << t;
    std::uint64_t rest = ux;
    for (int t = 0; t < m; ++t) rest &= ~(1ULL << gate.qubits[t]);
    for (std::uint64_t sp = 0; sp < (1ULL << m); ++sp) {
      Complex amp = u(static_cast<Eigen::Index>(sp), static_cast<Eigen::Index>(sub));
      if (amp == Complex{0.0, 0.0}) continue;
      std::uint64_t xp = rest;
      for (int t = 0; t < m; ++t)
        if (sp & (1ULL << t)) xp |= 1ULL << gate.qubits[t];
      out[static_cast<Eigen::Index>(xp)] += amp * vec[x];
    }
  }
  vec = out;
}

Gate make_gate(GateKind kind, std::vector<int> q) {
  Gate g{kind, std::move(q), std::nullopt, 1.0};
  if (gate_is_parametrized(kind)) g.param = 0;
  return g;
}

double oracle_distance(const State& s, const Eigen::VectorXcd& vec) {
  double m = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    m = std::max(m, std::abs(s.amplitudes()[i] -
                             vec[static_cast<Eigen::Index>(i)]));
  return m;
}

}  // namespace

TEST_CASE("every native gate matches the dense matrix oracle") {
  Rng rng(2024);
  const GateKind kinds[] = {GateKind::RY,   GateKind::H,     GateKind::X,
                            GateKind::CNOT, GateKind::CZ,    GateKind::CRY,
                            GateKind::SWAP, GateKind::FSWAP, GateKind::OSWAP,
                            GateKind::SE,   GateKind::DE,    GateKind::MCRY};
  const int n = 5;
  for (GateKind kind : kinds) {
    CAPTURE(gate_kind_name(kind));
    int m = gate_operand_count(kind);
    for (int trial = 0; trial < 10; ++trial) {
      // Scattered operand assignment within the 5-qubit register.
      std::vector<int> perm{0, 1, 2, 3, 4};
      for (int i = 4; i > 0; --i)
        std::swap(perm[i], perm[rng.next_index(i + 1)]);
      perm.resize(m);
      double theta = 3.0 * rng.next_symmetric();

      State s(n);
      randomize_state(s, rng);
      Eigen::VectorXcd vec(1 << n);
      for (int i = 0; i < (1 << n); ++i)
        vec[i] = s.amplitudes()[static_cast<std::size_t>(i)];

      std::vector<double> params{theta};
      apply_gate(s, make_gate(kind, perm), params);
      oracle_apply(vec, make_gate(kind, perm), theta, n);
      CHECK(oracle_distance(s, vec) < 1e-12);
    }
  }
}

TEST_CASE("decomposed circuits reproduce native gates at 50 random angles") {
  Rng rng(7);
  const GateKind kinds[] = {GateKind::CRY,   GateKind::SWAP, GateKind::FSWAP,
                            GateKind::OSWAP, GateKind::SE,   GateKind::DE,
                            GateKind::MCRY};
  for (GateKind kind : kinds) {
    CAPTURE(gate_kind_name(kind));
    int m = gate_operand_count(kind);
    for (int trial = 0; trial < 50; ++trial) {
      double theta = 4.0 * rng.next_symmetric();
      Circuit c;
      c.n_qubits = m;
      std::vector<int> q(m);
      for (int i = 0; i < m; ++i) q[i] = i;
      c.gates.push_back(make_gate(kind, q));
      if (gate_is_parametrized(kind)) c.n_params = 1;

      State native(m), rewritten(m);
      randomize_state(native, rng);
      rewritten.amplitudes() = native.amplitudes();
      std::vector<double> params{theta};
      for (const auto& g : c.gates) apply_gate(native, g, params);
      for (const auto& g : decompose(c).gates) apply_gate(rewritten, g, params);
      CHECK(state_distance(native, rewritten) < 1e-10);
    }
  }
}

TEST_CASE("random circuits agree with the oracle on 3 qubits") {
  Rng rng(31);
  const GateKind pool[] = {GateKind::RY,  GateKind::H,    GateKind::X,
                           GateKind::CNOT, GateKind::CZ,  GateKind::CRY,
                           GateKind::SWAP, GateKind::FSWAP};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    State s(n);
    Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(1 << n);
    vec[0] = 1.0;
    for (int step = 0; step < 25; ++step) {
      GateKind kind = pool[rng.next_index(std::size(pool))];
      int m = gate_operand_count(kind);
      std::vector<int> perm{0, 1, 2};
      std::swap(perm[0], perm[rng.next_index(3)]);
      std::swap(perm[1], perm[1 + rng.next_index(2)]);
      perm.resize(m);
      double theta = 3.0 * rng.next_symmetric();
      std::vector<double> params{theta};
      apply_gate(s, make_gate(kind, perm), params);
      oracle_apply(vec, make_gate(kind, perm), theta, n);
    }
    CHECK(oracle_distance(s, vec) < 1e-12);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fermionic swaps are involutions") {
  Rng rng(5);
  State s(4);
  randomize_state(s, rng);
  State ref = s;
  std::vector<double> none;
  apply_gate(s, make_gate(GateKind::FSWAP, {1, 3}), none);
  apply_gate(s, make_gate(GateKind::FSWAP, {1, 3}), none);
  CHECK(state_distance(s, ref) < 1e-14);
  apply_gate(s, make_gate(GateKind::OSWAP, {0, 1, 2, 3}), none);
  apply_gate(s, make_gate(GateKind::OSWAP, {0, 1, 2, 3}), none);
  CHECK(state_distance(s, ref) < 1e-14);
}

TEST_CASE("excitation gates conserve particle number") {
  Rng rng(13);
  for (GateKind kind : {GateKind::SE, GateKind::DE}) {
    CAPTURE(gate_kind_name(kind));
    for (int weight = 0; weight <= 4; ++weight) {
      // Random superposition restricted to one Hamming-weight sector.
      State s(4);
      auto& amp = s.amplitudes();
      amp[0] = 0.0;
      for (std::uint64_t x = 0; x < 16; ++x)
        if (std::popcount(x) == weight)
          amp[x] = {rng.next_symmetric(), rng.next_symmetric()};
      double nrm = s.norm();
      for (auto& a : amp) a /= nrm;

      std::vector<double> params{1.3};
      apply_gate(s, make_gate(kind, {0, 1, 2, 3}), params);
      double leak = 0.0;
      for (std::uint64_t x = 0; x < 16; ++x)
        if (std::popcount(x) != weight) leak += std::norm(s.amplitudes()[x]);
      CHECK(leak < 1e-20);
    }
  }
}

TEST_CASE("simulate and expectation basics") {
  Circuit c;
  c.n_qubits = 2;
  c.n_params = 1;
  c.gates.push_back(make_gate(GateKind::H, {0}));
  c.gates.push_back(make_gate(GateKind::CNOT, {0, 1}));
  Gate r = make_gate(GateKind::RY, {0});
  c.gates.push_back(r);
  c.validate();

  State s = simulate(c, std::vector<double>{0.0});
  // Bell state: <X0 X1> = 1, <Z0> = 0.
  PauliSum xx;
  xx.n_qubits = 2;
  xx.terms.push_back({1.0, {{0, PauliAxis::X}, {1, PauliAxis::X}}});
  CHECK(expectation(s, xx) == doctest::Approx(1.0).epsilon(1e-12));
  PauliSum z0;
  z0.n_qubits = 2;
  z0.terms.push_back({1.0, {{0, PauliAxis::Z}}});
  CHECK(expectation(s, z0) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS(simulate(c, std::vector<double>{}));  // param count mismatch
  CHECK_THROWS(State(21));
  PauliSum wrong;
  wrong.n_qubits = 3;
  CHECK_THROWS(expectation(s, wrong));
}
