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

#include "swapnet/benchmark.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "swapnet/circuit.hpp"
#include "swapnet/exact.hpp"
#include "swapnet/statevector.hpp"

namespace swapnet {

namespace {

int worker_count() {
  if (const char* env = std::getenv("SWAPNET_WORKERS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Variant {
  std::string ansatz;  // "plain" or "swapped"
  int layers;
  int repetitions;  // 0 for plain
};

// Qubit permutation carrying logical labels to their physical position after
// `repetitions` passes of the swap network.
std::vector<int> hamiltonian_permutation(const SwapProtocol& protocol,
                                         int repetitions, bool fermionic) {
  int n = protocol.n;
  std::vector<int> labelling(n);
  for (int i = 0; i < n; ++i) labelling[i] = i;
  for (int r = 0; r < repetitions; ++r)
    labelling = protocol.final_labelling(labelling);
  std::vector<int> position(n);
  for (int v = 0; v < n; ++v) position[labelling[v]] = v;
  if (!fermionic) return position;
  std::vector<int> qperm(2 * n);
  for (int orbital = 0; orbital < n; ++orbital) {
    qperm[2 * orbital] = 2 * position[orbital];
    qperm[2 * orbital + 1] = 2 * position[orbital] + 1;
  }
  return qperm;
}

}  // namespace

void BenchmarkSpec::validate() const {
  if (graph_file.empty()) throw std::invalid_argument("benchmark: missing graph file");
  if (entangling_layers.empty() && repetitions.empty())
    throw std::invalid_argument("benchmark: no variants requested");
  if (seeds.empty()) throw std::invalid_argument("benchmark: empty seeds list");
  if (instances < 1) throw std::invalid_argument("benchmark: instances must be >= 1");
  if (static_cast<int>(seeds.size()) != instances && seeds.size() != 1)
    throw std::invalid_argument(
        "benchmark: seeds must list one seed per instance or a single base");
  if (layers_per_slot < 1)
    throw std::invalid_argument("benchmark: layers_per_slot must be >= 1");
  if (flavor != "cry-hea" && flavor != "excitation")
    throw std::invalid_argument("benchmark: unknown ansatz flavor " + flavor);
  anneal.validate();
  vqe.validate();
}

std::uint64_t BenchmarkSpec::instance_seed(int instance) const {
  if (seeds.size() == 1)
    return seeds[0] + static_cast<std::uint64_t>(instance);
  return seeds[instance];
}

std::string BenchmarkSpec::to_json() const {
  nlohmann::json j;
  j["graph_file"] = graph_file;
  j["k"] = k;
  j["flavor"] = flavor;
  j["entangling_layers"] = entangling_layers;
  j["repetitions"] = repetitions;
  j["layers_per_slot"] = layers_per_slot;
  j["instances"] = instances;
  j["seeds"] = seeds;
  if (hamiltonian_file) j["hamiltonian_file"] = *hamiltonian_file;
  j["anneal"] = {{"steps", anneal.steps},       {"t0", anneal.t0},
                 {"alpha", anneal.alpha},       {"p_add", anneal.p_add},
                 {"restarts", anneal.restarts}, {"seed", anneal.seed},
                 {"dist_exponent", anneal.dist_exponent}};
  j["vqe"] = {{"optimizer", vqe.optimizer == Optimizer::simplex_free
                                ? "simplex_free"
                                : "quasi_newton"},
              {"max_iters", vqe.max_iters},
              {"init_scale", vqe.init_scale},
              {"seed", vqe.seed},
              {"tol", vqe.tol}};
  j["output_path"] = output_path;
  return j.dump(2) + "\n";
}

BenchmarkSpec BenchmarkSpec::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  BenchmarkSpec s;
  s.graph_file = j.at("graph_file").get<std::string>();
  s.k = j.value("k", 2);
  s.flavor = j.value("flavor", std::string("cry-hea"));
  s.entangling_layers = j.value("entangling_layers", std::vector<int>{});
  s.repetitions = j.value("repetitions", std::vector<int>{});
  s.layers_per_slot = j.value("layers_per_slot", 1);
  s.instances = j.value("instances", 1);
  s.seeds = j.value("seeds", std::vector<std::uint64_t>{});
  if (j.contains("hamiltonian_file"))
    s.hamiltonian_file = j.at("hamiltonian_file").get<std::string>();
  if (j.contains("anneal")) {
    const auto& a = j.at("anneal");
    s.anneal.steps = a.value("steps", 0);
    s.anneal.t0 = a.value("t0", 0.0);
    s.anneal.alpha = a.value("alpha", 0.995);
    s.anneal.p_add = a.value("p_add", 0.5);
    s.anneal.restarts = a.value("restarts", 4);
    s.anneal.seed = a.value("seed", std::uint64_t{0});
    s.anneal.dist_exponent = a.value("dist_exponent", 2);
  }
  if (j.contains("vqe")) {
    const auto& v = j.at("vqe");
    s.vqe.optimizer = v.value("optimizer", std::string("quasi_newton")) ==
                              "simplex_free"
                          ? Optimizer::simplex_free
                          : Optimizer::quasi_newton;
    s.vqe.max_iters = v.value("max_iters", 2000);
    s.vqe.init_scale = v.value("init_scale", 1e-2);
    s.vqe.seed = v.value("seed", std::uint64_t{0});
    s.vqe.tol = v.value("tol", 1e-9);
  }
  s.output_path = j.value("output_path", std::string{});
  return s;
}

BenchmarkResult run_benchmark(const BenchmarkSpec& spec) {
  spec.validate();
  ConnectivityGraph g = load_graph(spec.graph_file);
  const bool fermionic = spec.flavor == "excitation";

  AnnealConfig route_cfg = spec.anneal;
  route_cfg.k = spec.k;
  SwapProtocol protocol = optimize_network(g, route_cfg);

  std::vector<Variant> variants;
  for (int layers : spec.entangling_layers)
    variants.push_back({"plain", layers, 0});
  for (int reps : spec.repetitions)
    variants.push_back({"swapped", spec.layers_per_slot, reps});

  // Instance Hamiltonians and references are shared across variants.
  struct Instance {
    std::uint64_t seed;
    PauliSum hamiltonian;
    double reference;
  };
  std::vector<Instance> instances;
  if (spec.hamiltonian_file) {
    PauliSum hm = load_pauli_sum(*spec.hamiltonian_file);
    instances.push_back({0, hm, exact_ground_energy(hm)});
  } else {
    int n_spins = fermionic ? 2 * g.n() : g.n();
    for (int i = 0; i < spec.instances; ++i) {
      std::uint64_t seed = spec.instance_seed(i);
      PauliSum hm = gen_spin_glass(n_spins, seed).hamiltonian();
      instances.push_back({seed, hm, exact_ground_energy(hm)});
    }
  }

  struct Job {
    int instance;
    int variant;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < static_cast<int>(instances.size()); ++i)
    for (int v = 0; v < static_cast<int>(variants.size()); ++v)
      jobs.push_back({i, v});

  std::vector<BenchmarkRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= jobs.size()) return;
      const auto& job = jobs[idx];
      const auto& variant = variants[job.variant];
      const auto& inst = instances[job.instance];
      BenchmarkRow row{};
      row.instance = job.instance;
      row.seed = inst.seed;
      row.ansatz = variant.ansatz;
      row.layers = variant.layers;
      row.repetitions = variant.repetitions;
      row.reference = inst.reference;
      try {
        Circuit circuit;
        PauliSum hm = inst.hamiltonian;
        if (variant.ansatz == "plain") {
          circuit = fermionic ? build_excitation_ansatz(g, variant.layers)
                              : build_cry_hea(g, variant.layers);
        } else {
          circuit = embed_swap_network(
              g, protocol, variant.layers, variant.repetitions,
              fermionic ? SwapFlavor::fermionic : SwapFlavor::qubit);
          hm = hm.permuted(hamiltonian_permutation(
              protocol, variant.repetitions, fermionic));
        }
        Metrics m = metrics(circuit);
        row.cnot_count = m.cnot_count;
        row.depth = m.depth;
        row.n_params = m.n_params;
        VqeConfig cfg = spec.vqe;
        cfg.seed = spec.vqe.seed + 7919ULL * static_cast<std::uint64_t>(job.instance) +
                   static_cast<std::uint64_t>(job.variant);
        VqeResult res = run_vqe(circuit, hm, cfg);
        row.energy = res.best_energy;
        row.energy_error = energy_error(res, inst.reference);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows[idx] = std::move(row);
    }
  };
  int workers = std::min<int>(worker_count(), static_cast<int>(jobs.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  BenchmarkResult result;
  result.protocol = std::move(protocol);
  result.rows = std::move(rows);

  for (int v = 0; v < static_cast<int>(variants.size()); ++v) {
    std::vector<double> errors;
    const BenchmarkRow* sample = nullptr;
    for (std::size_t idx = 0; idx < jobs.size(); ++idx)
      if (jobs[idx].variant == v && result.rows[idx].error.empty()) {
        errors.push_back(result.rows[idx].energy_error);
        sample = &result.rows[idx];
      }
    if (!sample) continue;
    auto stats = median_iqr(errors);
    result.summary.push_back({variants[v].ansatz, variants[v].layers,
                              variants[v].repetitions, sample->cnot_count,
                              sample->depth, sample->n_params, stats.median,
                              stats.q1, stats.q3});
  }
  return result;
}

std::string benchmark_rows_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "instance,seed,ansatz,layers,repetitions,cnot_count,depth,n_params,"
         "energy,reference,energy_error,error\n";
  for (const auto& r : result.rows) {
    out << r.instance << ',' << r.seed << ',' << r.ansatz << ',' << r.layers
        << ',' << r.repetitions << ',' << r.cnot_count << ',' << r.depth << ','
        << r.n_params << ',' << fmt_double(r.energy) << ','
        << fmt_double(r.reference) << ',' << fmt_double(r.energy_error) << ','
        << r.error << '\n';
  }
  return out.str();
}

std::string benchmark_summary_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "ansatz,layers,repetitions,cnot_count,depth,n_params,median_error,"
         "q1_error,q3_error\n";
  for (const auto& s : result.summary) {
    out << s.ansatz << ',' << s.layers << ',' << s.repetitions << ','
        << s.cnot_count << ',' << s.depth << ',' << s.n_params << ','
        << fmt_double(s.median_error) << ',' << fmt_double(s.q1_error) << ','
        << fmt_double(s.q3_error) << '\n';
  }
  return out.str();
}

}  // namespace swapnet
