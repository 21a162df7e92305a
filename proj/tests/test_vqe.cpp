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

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "swapnet/exact.hpp"
#include "swapnet/pauli.hpp"
#include "swapnet/router.hpp"
#include "swapnet/vqe.hpp"

using namespace swapnet;
using swapnet::testing::preset;

namespace {

Circuit single_ry() {
  Circuit c;
  c.n_qubits = 1;
  c.n_params = 1;
  c.gates.push_back({GateKind::RY, {0}, 0, 1.0});
  return c;
}

PauliSum minus_z0() {
  PauliSum hm;
  hm.n_qubits = 1;
  hm.terms.push_back({-1.0, {{0, PauliAxis::Z}}});
  return hm;
}

}  // namespace

TEST_CASE("single-qubit minimization reaches the exact ground state") {
  for (Optimizer opt : {Optimizer::simplex_free, Optimizer::quasi_newton}) {
    VqeConfig cfg;
    cfg.optimizer = opt;
    cfg.seed = 3;
    VqeResult r = run_vqe(single_ry(), minus_z0(), cfg);
    CHECK(r.best_energy == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(r.iterations_used <= cfg.max_iters);
    CHECK(r.energy_trace.size() == static_cast<std::size_t>(r.iterations_used));
    CHECK(energy_error(r, -1.0) >= -1e-9);
  }
}

TEST_CASE("zero-parameter circuit is a single evaluation") {
  Circuit c;
  c.n_qubits = 1;
  c.gates.push_back({GateKind::X, {0}, std::nullopt, 1.0});
  VqeConfig cfg;
  VqeResult r = run_vqe(c, minus_z0(), cfg);
  CHECK(r.iterations_used == 1);
  CHECK(r.best_energy == doctest::Approx(1.0));
  CHECK(r.best_params.empty());
}

TEST_CASE("evaluation budget is a hard cap") {
  VqeConfig cfg;
  cfg.max_iters = 5;
  VqeResult r = run_vqe(single_ry(), minus_z0(), cfg);
  CHECK(r.iterations_used == 5);
  CHECK(r.energy_trace.size() == 5);
}

TEST_CASE("identical seeds give byte-identical results") {
  VqeConfig cfg;
  cfg.seed = 11;
  cfg.max_iters = 200;
  std::string a = run_vqe(single_ry(), minus_z0(), cfg).to_json();
  std::string b = run_vqe(single_ry(), minus_z0(), cfg).to_json();
  CHECK(a == b);
  cfg.seed = 12;
  CHECK(run_vqe(single_ry(), minus_z0(), cfg).to_json() != a);
}

TEST_CASE("central differences match a five-point-stencil oracle") {
  Objective f = [](const std::vector<double>& x) {
    return std::sin(x[0]) * std::cos(x[1]) + 0.5 * x[0] * x[0] * x[1];
  };
  std::vector<double> x{0.4, -1.1};
  auto g = central_difference_gradient(f, x, 1e-4);

  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = 1e-3;
    auto at = [&](double delta) {
      auto p = x;
      p[i] += delta;
      return f(p);
    };
    double five_point =
        (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
    CHECK(g[i] == doctest::Approx(five_point).epsilon(1e-6));
  }
}

TEST_CASE("median and quartiles use linear interpolation") {
  auto s = median_iqr({4.0, 1.0, 3.0, 2.0});
  CHECK(s.median == doctest::Approx(2.5));
  CHECK(s.q1 == doctest::Approx(1.75));
  CHECK(s.q3 == doctest::Approx(3.25));
  auto single = median_iqr({7.0});
  CHECK(single.median == 7.0);
  CHECK(single.q1 == 7.0);
  CHECK(single.q3 == 7.0);
  CHECK_THROWS(median_iqr({}));
}

TEST_CASE("four-spin glass with a swap-augmented ansatz reaches the ground state") {
  ConnectivityGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
  AnnealConfig route;
  route.k = 1;
  route.seed = 2;
  route.steps = 600;
  route.restarts = 2;
  SwapProtocol p = optimize_network(g, route);
  REQUIRE(p.complete);

  PauliSum hm = gen_spin_glass(4, 21).hamiltonian();
  double reference = exact_ground_energy(hm);

  Circuit c = embed_swap_network(g, p, 1, 2, SwapFlavor::qubit);
  // Route the Hamiltonian to the physical qubits holding each label at the end.
  std::vector<int> labelling{0, 1, 2, 3};
  labelling = p.final_labelling(labelling);
  labelling = p.final_labelling(labelling);
  std::vector<int> perm(4);
  for (int v = 0; v < 4; ++v) perm[labelling[v]] = v;
  PauliSum routed = hm.permuted(perm);

  VqeConfig cfg;
  cfg.seed = 5;
  cfg.max_iters = 4000;
  VqeResult r = run_vqe(c, routed, cfg);
  CHECK(energy_error(r, reference) >= -1e-9);
  CHECK(energy_error(r, reference) < 1e-3);
}

TEST_CASE("config validation") {
  VqeConfig cfg;
  cfg.max_iters = 0;
  CHECK_THROWS(run_vqe(single_ry(), minus_z0(), cfg));
  cfg = {};
  cfg.tol = 0.0;
  CHECK_THROWS(run_vqe(single_ry(), minus_z0(), cfg));
  cfg = {};
  PauliSum wrong;
  wrong.n_qubits = 2;
  wrong.terms.push_back({1.0, {{1, PauliAxis::Z}}});
  CHECK_THROWS(run_vqe(single_ry(), wrong, cfg));
}
