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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "swapnet/benchmark.hpp"
#include "swapnet/circuit.hpp"
#include "swapnet/exact.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/pauli.hpp"
#include "swapnet/router.hpp"
#include "swapnet/statevector.hpp"
#include "swapnet/vqe.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string swap_summary_path(const std::string& rows_path) {
  auto dot = rows_path.rfind(".csv");
  if (dot != std::string::npos && dot == rows_path.size() - 4)
    return rows_path.substr(0, dot) + "-summary.csv";
  return rows_path + "-summary.csv";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swap-network routing, ansatz construction and VQE benchmarks"};
  app.require_subcommand(1);

  // route
  std::string route_graph, route_out;
  swapnet::AnnealConfig anneal;
  int route_max_blocks = 0;
  auto* route = app.add_subcommand("route", "optimize a swap network");
  route->add_option("--graph", route_graph, "connectivity graph file")
      ->required();
  route->add_option("--k", anneal.k, "max swap layers per block");
  route->add_option("--steps", anneal.steps, "annealing steps (0 = 2000*k)");
  route->add_option("--t0", anneal.t0, "initial temperature (0 = probe)");
  route->add_option("--alpha", anneal.alpha, "geometric cooling factor");
  route->add_option("--p-add", anneal.p_add, "probability of the add move");
  route->add_option("--restarts", anneal.restarts, "chains per block");
  route->add_option("--seed", anneal.seed, "annealing seed");
  route->add_option("--max-blocks", route_max_blocks,
                    "block cap (0 = until complete)");
  route->add_option("--dist-exponent", anneal.dist_exponent,
                    "distance exponent in the cost");
  route->add_option("--output,-o", route_out, "protocol JSON path (- = stdout)");

  // ansatz
  std::string ansatz_graph, ansatz_flavor = "cry-hea", ansatz_protocol,
              ansatz_out;
  int ansatz_layers = 1, ansatz_reps = 1;
  bool ansatz_decompose = false;
  auto* ansatz = app.add_subcommand("ansatz", "build an ansatz circuit");
  ansatz->add_option("--graph", ansatz_graph, "connectivity graph file")
      ->required();
  ansatz->add_option("--flavor", ansatz_flavor, "cry-hea or excitation")
      ->check(CLI::IsMember({"cry-hea", "excitation"}));
  ansatz->add_option("--layers", ansatz_layers,
                     "entangling layers (per slot when embedding)");
  ansatz->add_option("--protocol", ansatz_protocol,
                     "swap protocol JSON; embeds the network when given");
  ansatz->add_option("--repetitions", ansatz_reps,
                     "network repetitions when embedding");
  ansatz->add_flag("--decompose", ansatz_decompose,
                   "emit the decomposed gate set");
  ansatz->add_option("--output,-o", ansatz_out, "circuit JSON path (- = stdout)");

  // vqe
  std::string vqe_circuit, vqe_hamiltonian, vqe_optimizer = "quasi_newton",
              vqe_out;
  swapnet::VqeConfig vqe_cfg;
  auto* vqe = app.add_subcommand("vqe", "minimize a Hamiltonian expectation");
  vqe->add_option("--circuit", vqe_circuit, "circuit JSON file")->required();
  vqe->add_option("--hamiltonian", vqe_hamiltonian, "Pauli-sum file")
      ->required();
  vqe->add_option("--optimizer", vqe_optimizer, "simplex_free or quasi_newton")
      ->check(CLI::IsMember({"simplex_free", "quasi_newton"}));
  vqe->add_option("--max-iters", vqe_cfg.max_iters, "objective evaluations");
  vqe->add_option("--init-scale", vqe_cfg.init_scale,
                  "initial-angle window half-width");
  vqe->add_option("--seed", vqe_cfg.seed, "initial-point seed");
  vqe->add_option("--tol", vqe_cfg.tol, "convergence tolerance");
  vqe->add_option("--output,-o", vqe_out, "result JSON path (- = stdout)");

  // benchmark
  std::string bench_spec;
  auto* bench = app.add_subcommand("benchmark", "run a benchmark spec");
  bench->add_option("--spec", bench_spec, "benchmark spec JSON file")
      ->required();

  // exact
  std::string exact_hamiltonian;
  auto* exact = app.add_subcommand("exact", "exact ground-state energy");
  exact->add_option("--hamiltonian", exact_hamiltonian, "Pauli-sum file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (route->parsed()) {
      swapnet::ConnectivityGraph g = swapnet::load_graph(route_graph);
      if (route_max_blocks > 0) anneal.max_blocks = route_max_blocks;
      swapnet::SwapProtocol p = swapnet::optimize_network(g, anneal);
      write_output(route_out, swapnet::protocol_to_json(p));
      std::cerr << (p.complete ? "complete" : "partial") << " protocol: "
                << p.total_layers() << " layers, " << p.total_swaps()
                << " swaps\n";
      return p.complete ? 0 : 2;
    }
    if (ansatz->parsed()) {
      swapnet::ConnectivityGraph g = swapnet::load_graph(ansatz_graph);
      swapnet::Circuit c;
      if (!ansatz_protocol.empty()) {
        auto p = swapnet::protocol_from_json(read_file(ansatz_protocol));
        c = swapnet::embed_swap_network(
            g, p, ansatz_layers, ansatz_reps,
            ansatz_flavor == "excitation" ? swapnet::SwapFlavor::fermionic
                                          : swapnet::SwapFlavor::qubit);
      } else if (ansatz_flavor == "excitation") {
        c = swapnet::build_excitation_ansatz(g, ansatz_layers);
      } else {
        c = swapnet::build_cry_hea(g, ansatz_layers);
      }
      swapnet::Metrics m = swapnet::metrics(c);
      if (ansatz_decompose) c = swapnet::decompose(c);
      write_output(ansatz_out, swapnet::circuit_to_json(c));
      std::cerr << "cnot_count " << m.cnot_count << ", depth " << m.depth
                << ", n_params " << m.n_params << "\n";
      return 0;
    }
    if (vqe->parsed()) {
      swapnet::Circuit c = swapnet::circuit_from_json(read_file(vqe_circuit));
      swapnet::PauliSum hm = swapnet::load_pauli_sum(vqe_hamiltonian);
      vqe_cfg.optimizer = vqe_optimizer == "simplex_free"
                              ? swapnet::Optimizer::simplex_free
                              : swapnet::Optimizer::quasi_newton;
      swapnet::VqeResult r = swapnet::run_vqe(c, hm, vqe_cfg);
      write_output(vqe_out, r.to_json());
      return 0;
    }
    if (bench->parsed()) {
      auto spec = swapnet::BenchmarkSpec::from_json(read_file(bench_spec));
      swapnet::BenchmarkResult result = swapnet::run_benchmark(spec);
      std::string rows = swapnet::benchmark_rows_csv(result);
      std::string summary = swapnet::benchmark_summary_csv(result);
      if (spec.output_path.empty()) {
        std::cout << rows << summary;
      } else {
        write_output(spec.output_path, rows);
        write_output(swap_summary_path(spec.output_path), summary);
        std::cout << summary;
      }
      return 0;
    }
    if (exact->parsed()) {
      swapnet::PauliSum hm = swapnet::load_pauli_sum(exact_hamiltonian);
      std::printf("%.17g\n", swapnet::exact_ground_energy(hm));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
