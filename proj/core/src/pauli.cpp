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

#include "swapnet/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "swapnet/rng.hpp"

namespace swapnet {

void PauliTerm::normalize() {
  std::sort(paulis.begin(), paulis.end());
  for (std::size_t i = 1; i < paulis.size(); ++i)
    if (paulis[i].first == paulis[i - 1].first)
      throw std::invalid_argument("pauli term: repeated qubit");
}

std::string PauliTerm::string_key() const {
  std::string key;
  for (auto [q, a] : paulis) {
    key += static_cast<char>(a);
    key += std::to_string(q);
    key += ' ';
  }
  return key;
}

PauliSum PauliSum::normalized() const {
  std::map<std::string, PauliTerm> merged;
  for (PauliTerm t : terms) {
    t.normalize();
    for (auto [q, a] : t.paulis)
      if (q < 0 || q >= n_qubits)
        throw std::invalid_argument("pauli sum: qubit index out of range");
    if (!std::isfinite(t.coefficient))
      throw std::invalid_argument("pauli sum: non-finite coefficient");
    auto key = t.string_key();
    auto it = merged.find(key);
    if (it == merged.end())
      merged.emplace(key, std::move(t));
    else
      it->second.coefficient += t.coefficient;
  }
  PauliSum out;
  out.n_qubits = n_qubits;
  for (auto& [key, t] : merged)
    if (t.coefficient != 0.0) out.terms.push_back(std::move(t));
  return out;
}

PauliSum PauliSum::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_qubits)
    throw std::invalid_argument("permute: size mismatch");
  PauliSum out;
  out.n_qubits = n_qubits;
  for (const auto& t : terms) {
    PauliTerm nt;
    nt.coefficient = t.coefficient;
    for (auto [q, a] : t.paulis) nt.paulis.push_back({perm[q], a});
    nt.normalize();
    out.terms.push_back(std::move(nt));
  }
  return out;
}

PauliSum SpinGlassInstance::hamiltonian() const {
  PauliSum hm;
  hm.n_qubits = n;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k, ++idx)
      hm.terms.push_back(
          {j[idx], {{i, PauliAxis::X}, {k, PauliAxis::X}}});
  for (int i = 0; i < n; ++i)
    hm.terms.push_back({h[i], {{i, PauliAxis::Z}}});
  return hm;
}

std::string SpinGlassInstance::to_json() const {
  nlohmann::json out;
  out["n"] = n;
  out["seed"] = seed;
  out["j"] = j;
  out["h"] = h;
  return out.dump(2) + "\n";
}

SpinGlassInstance SpinGlassInstance::from_json(const std::string& text) {
  auto in = nlohmann::json::parse(text);
  SpinGlassInstance inst;
  inst.n = in.at("n").get<int>();
  inst.seed = in.at("seed").get<std::uint64_t>();
  inst.j = in.at("j").get<std::vector<double>>();
  inst.h = in.at("h").get<std::vector<double>>();
  if (static_cast<int>(inst.j.size()) != inst.n * (inst.n - 1) / 2 ||
      static_cast<int>(inst.h.size()) != inst.n)
    throw std::invalid_argument("spin glass: wrong coefficient count");
  return inst;
}

SpinGlassInstance gen_spin_glass(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("spin glass: n must be >= 2");
  SpinGlassInstance inst;
  inst.n = n;
  inst.seed = seed;
  Rng rng(seed);
  for (int i = 0; i < n * (n - 1) / 2; ++i)
    inst.j.push_back(rng.next_symmetric());
  for (int i = 0; i < n; ++i) inst.h.push_back(rng.next_symmetric());
  return inst;
}

PauliSum parse_pauli_sum(std::istream& in) {
  PauliSum hm;
  int declared_qubits = -1;
  int max_index = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("pauli file line " + std::to_string(lineno) +
                               ": " + what);
    };
    if (first == "qubits") {
      if (!(ls >> declared_qubits) || declared_qubits < 1)
        fail("bad qubit count");
      continue;
    }
    PauliTerm term;
    try {
      std::size_t used = 0;
      term.coefficient = std::stod(first, &used);
      if (used != first.size()) fail("non-numeric coefficient '" + first + "'");
    } catch (const std::exception&) {
      fail("non-numeric coefficient '" + first + "'");
    }
    std::string axis;
    int q;
    while (ls >> axis) {
      if (axis.size() != 1 || (axis[0] != 'X' && axis[0] != 'Y' && axis[0] != 'Z'))
        fail("bad Pauli axis '" + axis + "'");
      if (!(ls >> q) || q < 0) fail("bad qubit index");
      term.paulis.push_back({q, static_cast<PauliAxis>(axis[0])});
      max_index = std::max(max_index, q);
    }
    term.normalize();
    hm.terms.push_back(std::move(term));
  }
  hm.n_qubits = declared_qubits > 0 ? declared_qubits : max_index + 1;
  if (hm.n_qubits < 1) throw std::runtime_error("pauli file: empty operator without 'qubits' header");
  if (max_index >= hm.n_qubits)
    throw std::runtime_error("pauli file: qubit index exceeds declared count");
  return hm.normalized();
}

PauliSum load_pauli_sum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pauli file: " + path);
  return parse_pauli_sum(in);
}

void write_pauli_sum(std::ostream& out, const PauliSum& hm) {
  out << "qubits " << hm.n_qubits << "\n";
  char buf[64];
  for (const auto& t : hm.terms) {
    std::snprintf(buf, sizeof buf, "%.17g", t.coefficient);
    out << buf;
    for (auto [q, a] : t.paulis)
      out << " " << static_cast<char>(a) << " " << q;
    out << "\n";
  }
}

}  // namespace swapnet
