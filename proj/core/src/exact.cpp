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

#include "swapnet/exact.hpp"

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <stdexcept>
#include <vector>

#include "swapnet/rng.hpp"

namespace swapnet {

namespace {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

struct CompiledTerm {
  double coefficient;
  std::uint64_t flip_mask;   // qubits with X or Y
  std::uint64_t z_mask;      // qubits with Z or Y
  std::uint64_t y_mask;      // qubits with Y
};

std::vector<CompiledTerm> compile_terms(const PauliSum& hm) {
  std::vector<CompiledTerm> out;
  for (const auto& t : hm.terms) {
    CompiledTerm ct{t.coefficient, 0, 0, 0};
    for (auto [q, a] : t.paulis) {
      std::uint64_t bit = 1ULL << q;
      switch (a) {
        case PauliAxis::X: ct.flip_mask |= bit; break;
        case PauliAxis::Y: ct.flip_mask |= bit; ct.z_mask |= bit; ct.y_mask |= bit; break;
        case PauliAxis::Z: ct.z_mask |= bit; break;
      }
    }
    out.push_back(ct);
  }
  return out;
}

// amplitude factor of P|x> = mu(x) |x ^ flip_mask>
Complex string_phase(const CompiledTerm& t, std::uint64_t x) {
  // Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>.
  int y_count = std::popcount(t.y_mask);
  int minus = std::popcount(x & t.z_mask);
  Complex phase(1.0, 0.0);
  switch (y_count & 3) {
    case 0: phase = {1.0, 0.0}; break;
    case 1: phase = {0.0, 1.0}; break;
    case 2: phase = {-1.0, 0.0}; break;
    case 3: phase = {0.0, -1.0}; break;
  }
  if (minus & 1) phase = -phase;
  return phase;
}

void matvec(const std::vector<CompiledTerm>& terms, const Vector& in,
            Vector& out) {
  out.setZero();
  const auto dim = in.size();
  for (const auto& t : terms) {
    for (Eigen::Index x = 0; x < dim; ++x) {
      auto ux = static_cast<std::uint64_t>(x);
      std::uint64_t y = ux ^ t.flip_mask;
      out[static_cast<Eigen::Index>(y)] +=
          t.coefficient * string_phase(t, ux) * in[x];
    }
  }
}

}  // namespace

double exact_ground_energy_dense(const PauliSum& hm) {
  if (hm.n_qubits > 12)
    throw std::invalid_argument("dense diagonalization capped at 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << hm.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  auto terms = compile_terms(hm);
  for (const auto& t : terms)
    for (Eigen::Index x = 0; x < dim; ++x) {
      auto ux = static_cast<std::uint64_t>(x);
      m(static_cast<Eigen::Index>(ux ^ t.flip_mask), x) +=
          t.coefficient * string_phase(t, ux);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double exact_ground_energy_lanczos(const PauliSum& hm) {
  const Eigen::Index dim = Eigen::Index{1} << hm.n_qubits;
  auto terms = compile_terms(hm);

  // Lanczos with full reorthogonalization; restarted from the best Ritz
  // vector until the extremal value stops moving.
  Rng rng(0x5eed5eed5eedULL);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v[i] = Complex(rng.next_symmetric(), rng.next_symmetric());
  v.normalize();

  const int max_krylov = 220;
  double best = 0.0;
  for (int restart = 0; restart < 6; ++restart) {
    std::vector<Vector> basis;
    std::vector<double> alpha, beta;
    Vector w(dim);
    basis.push_back(v);
    double prev_ritz = 1e300;
    Eigen::VectorXd ritz_vec;
    int m_used = 0;
    for (int j = 0; j < max_krylov; ++j) {
      matvec(terms, basis[j], w);
      double a = (basis[j].adjoint() * w).real()(0);
      alpha.push_back(a);
      w -= a * basis[j];
      if (j > 0) w -= beta[j - 1] * basis[j - 1];
      // full reorthogonalization
      for (const auto& b : basis) w -= (b.adjoint() * w)(0) * b;
      double nb = w.norm();
      m_used = j + 1;
      if (nb < 1e-13) break;
      beta.push_back(nb);
      basis.push_back(w / nb);

      if ((j + 1) % 10 == 0 || j + 1 == max_krylov) {
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(j + 1, j + 1);
        for (int i = 0; i <= j; ++i) {
          tri(i, i) = alpha[i];
          if (i < j) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
        double ritz = es.eigenvalues()(0);
        if (std::abs(ritz - prev_ritz) < 1e-12) {
          prev_ritz = ritz;
          ritz_vec = es.eigenvectors().col(0);
          break;
        }
        prev_ritz = ritz;
        ritz_vec = es.eigenvectors().col(0);
      }
    }
    {
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m_used, m_used);
      for (int i = 0; i < m_used; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < m_used) tri(i, i + 1) = tri(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
      best = es.eigenvalues()(0);
      ritz_vec = es.eigenvectors().col(0);
    }
    // Ritz vector for the next restart.
    Vector next = Vector::Zero(dim);
    for (int i = 0; i < m_used && i < ritz_vec.size(); ++i)
      next += ritz_vec(i) * basis[i];
    double nn = next.norm();
    if (nn < 1e-12) break;
    next /= nn;
    // Converged when the Ritz residual is tight.
    matvec(terms, next, w);
    double residual = (w - best * next).norm();
    v = next;
    if (residual < 1e-10) break;
  }
  return best;
}

double exact_ground_energy(const PauliSum& hm) {
  if (hm.n_qubits > 14)
    throw std::invalid_argument("exact_ground_energy capped at 14 qubits");
  if (hm.terms.empty()) return 0.0;
  if (hm.n_qubits <= 10) return exact_ground_energy_dense(hm);
  return exact_ground_energy_lanczos(hm);
}

}  // namespace swapnet
