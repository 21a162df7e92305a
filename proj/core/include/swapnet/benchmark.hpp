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
#include <optional>
#include <string>
#include <vector>

#include "swapnet/router.hpp"
#include "swapnet/vqe.hpp"

namespace swapnet {

/// Batch study over (spin-glass instance x ansatz variant): plain layered
/// ansatz at each depth in `entangling_layers`, plus the swap-network
/// embedding at each repetition count in `repetitions`.
struct BenchmarkSpec {
  std::string graph_file;
  int k = 2;
  std::string flavor = "cry-hea";  // "cry-hea" or "excitation"
  std::vector<int> entangling_layers;
  std::vector<int> repetitions;
  int layers_per_slot = 1;
  int instances = 1;
  std::vector<std::uint64_t> seeds;  // one per instance, or a single base seed
  std::optional<std::string> hamiltonian_file;  // replaces spin-glass instances
  AnnealConfig anneal;
  VqeConfig vqe;
  std::string output_path;

  void validate() const;
  std::uint64_t instance_seed(int instance) const;

  std::string to_json() const;
  static BenchmarkSpec from_json(const std::string& text);
};

struct BenchmarkRow {
  int instance;
  std::uint64_t seed;
  std::string ansatz;  // "plain" or "swapped"
  int layers;
  int repetitions;
  long long cnot_count;
  long long depth;
  int n_params;
  double energy;
  double reference;
  double energy_error;
  std::string error;  // per-row failure note; empty on success
};

struct BenchmarkSummaryRow {
  std::string ansatz;
  int layers;
  int repetitions;
  long long cnot_count;
  long long depth;
  int n_params;
  double median_error;
  double q1_error;
  double q3_error;
};

struct BenchmarkResult {
  SwapProtocol protocol;
  std::vector<BenchmarkRow> rows;
  std::vector<BenchmarkSummaryRow> summary;
};

/// Runs every (instance x variant) job, in parallel when SWAPNET_WORKERS (or
/// hardware concurrency) allows; output order is deterministic.
BenchmarkResult run_benchmark(const BenchmarkSpec& spec);

std::string benchmark_rows_csv(const BenchmarkResult& result);
std::string benchmark_summary_csv(const BenchmarkResult& result);

}  // namespace swapnet
