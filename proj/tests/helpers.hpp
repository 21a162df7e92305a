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

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "swapnet/rng.hpp"
#include "swapnet/statevector.hpp"

namespace swapnet::testing {

inline std::string preset(const std::string& name) {
  return std::string(SWAPNET_PRESET_DIR) + "/" + name;
}

inline void randomize_state(State& s, Rng& rng) {
  auto& amp = s.amplitudes();
  for (auto& a : amp) a = {rng.next_symmetric(), rng.next_symmetric()};
  double n = s.norm();
  for (auto& a : amp) a /= n;
}

inline double state_distance(const State& a, const State& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    m = std::max(m, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  return m;
}

}  // namespace swapnet::testing
