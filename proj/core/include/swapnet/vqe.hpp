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
#include <functional>
#include <string>
#include <vector>

#include "swapnet/circuit.hpp"
#include "swapnet/pauli.hpp"

namespace swapnet {

enum class Optimizer { simplex_free, quasi_newton };

struct VqeConfig {
  Optimizer optimizer = Optimizer::quasi_newton;
  int max_iters = 2000;       // counted in objective evaluations
  double init_scale = 1e-2;   // half-width of the uniform initial-angle window
  std::uint64_t seed = 0;
  double tol = 1e-9;

  void validate() const;
};

struct VqeResult {
  double best_energy = 0.0;
  std::vector<double> best_params;
  std::vector<double> energy_trace;  // one entry per objective evaluation
  int iterations_used = 0;           // objective evaluations consumed
  Metrics circuit_metrics;

  std::string to_json() const;
};

VqeResult run_vqe(const Circuit& c, const PauliSum& hm, const VqeConfig& cfg);

/// best_energy - reference; >= -1e-9 whenever the reference is exact.
double energy_error(const VqeResult& result, double reference);

/// Generic minimizers, exposed for reuse and for gradient cross-checks.
using Objective = std::function<double(const std::vector<double>&)>;

std::vector<double> central_difference_gradient(const Objective& f,
                                                const std::vector<double>& x,
                                                double step = 1e-4);

struct MedianIqr {
  double median;
  double q1;
  double q3;
};
MedianIqr median_iqr(std::vector<double> values);

}  // namespace swapnet
